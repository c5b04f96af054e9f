// Copyright 2026 The gridsink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the gridsink solver.
 *
 * Every function returns a gs_status. On failure gs_last_error() describes
 * the problem; the message is per thread and valid until the next call.
 * Strings handed out by the library are released with gs_string_free. */

#ifndef GRIDSINK_GRIDSINK_H_
#define GRIDSINK_GRIDSINK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GS_API __declspec(dllexport)
#else
#define GS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_VERIFY_FAILED = 1, /* a verification suite found a counterexample */
  GS_BAD_INPUT = 2,     /* malformed JSON, bad selector, y out of range */
  GS_GUARD = 3,         /* problem exceeds an oracle size guard */
  GS_INTERNAL = 4
} gs_status;

typedef struct gs_network gs_network;

typedef struct gs_rational {
  int64_t num;
  int64_t den; /* always positive */
} gs_rational;

typedef struct gs_edge {
  int32_t row_a, col_a;
  int32_t row_b, col_b;
} gs_edge;

typedef struct gs_solve_result {
  gs_edge edge;
  gs_rational y_star;
  gs_rational theta_star;
  int32_t boundary; /* y_star is an endpoint of the edge */
  int32_t binding_i;
  int32_t binding_j;
} gs_solve_result;

typedef enum gs_format { GS_FORMAT_JSON = 0, GS_FORMAT_CSV = 1 } gs_format;

GS_API const char* gs_last_error(void);
GS_API void gs_string_free(char* s);

GS_API gs_status gs_network_parse(const char* json, size_t len,
                                  gs_network** out);
GS_API void gs_network_free(gs_network* net);
GS_API gs_status gs_network_dims(const gs_network* net, int32_t* rows,
                                 int32_t* cols);
GS_API gs_status gs_network_edge_count(const gs_network* net, size_t* count);
GS_API gs_status gs_network_edge_at(const gs_network* net, size_t index,
                                    gs_edge* out);

/* "n" or "n/d". */
GS_API gs_status gs_rational_parse(const char* text, gs_rational* out);

/* selector is "r1,c1:r2,c2". */
GS_API gs_status gs_edge_parse(const char* selector, gs_edge* out);

GS_API gs_status gs_solve_edge(const gs_network* net, gs_edge edge,
                               gs_solve_result* out);
GS_API gs_status gs_solve_edge_json(const gs_network* net, gs_edge edge,
                                    char** json_out);
/* Best edge placement; with include_nodes also every node placement (grids
 * of at most 400 nodes). oracle_steps <= 0 selects the default. */
GS_API gs_status gs_solve_grid_json(const gs_network* net, int include_nodes,
                                    int oracle_steps, char** json_out);
GS_API gs_status gs_envelope_export(const gs_network* net, gs_edge edge,
                                   gs_format format, char** text_out);

/* Flow-based reference values as an array of {query, value} records.
 * A zero y.den sweeps y = k*transit/steps for 0 <= k <= steps. With
 * node_sink set, edge names the node through (row_a, col_a) and y is
 * ignored. steps <= 0 selects the default. */
GS_API gs_status gs_oracle_json(const gs_network* net, gs_edge edge,
                                gs_rational y, int node_sink, int steps,
                                int allow_waiting, char** json_out);

/* net may be NULL for seeded random grids. sizes may be NULL for the
 * defaults. Returns GS_VERIFY_FAILED when any suite fails; the report is
 * written either way. */
GS_API gs_status gs_verify(const gs_network* net, uint64_t seed,
                           const int32_t* sizes, size_t size_count,
                           char** json_out);
GS_API gs_status gs_bench(const int32_t* sizes, size_t size_count,
                          uint64_t seed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GRIDSINK_GRIDSINK_H_ */
