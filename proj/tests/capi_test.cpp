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

#include "gridsink/gridsink.h"

#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

constexpr char kUnit3[] =
    R"({"rows":3,"cols":3,"capacity":1,"transit":1,)"
    R"("supplies":[[1,1,1],[1,1,1],[1,1,1]]})";

class Handle {
 public:
  explicit Handle(const char* doc) {
    status_ = gs_network_parse(doc, std::strlen(doc), &net_);
  }
  ~Handle() { gs_network_free(net_); }
  gs_network* get() const { return net_; }
  gs_status status() const { return status_; }

 private:
  gs_network* net_ = nullptr;
  gs_status status_;
};

std::string Take(char* s) {
  std::string out = s ? s : "";
  gs_string_free(s);
  return out;
}

gs_edge Edge(const char* selector) {
  gs_edge e{};
  EXPECT_EQ(gs_edge_parse(selector, &e), GS_OK);
  return e;
}

TEST(CApi, ParseAndInspect) {
  Handle h(kUnit3);
  ASSERT_EQ(h.status(), GS_OK);
  int32_t rows = 0, cols = 0;
  EXPECT_EQ(gs_network_dims(h.get(), &rows, &cols), GS_OK);
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(cols, 3);
  size_t count = 0;
  EXPECT_EQ(gs_network_edge_count(h.get(), &count), GS_OK);
  EXPECT_EQ(count, 12u);
  gs_edge e{};
  EXPECT_EQ(gs_network_edge_at(h.get(), 1, &e), GS_OK);
  EXPECT_EQ(e.row_a, 0);
  EXPECT_EQ(e.col_a, 0);
  EXPECT_EQ(e.row_b, 1);
  EXPECT_EQ(e.col_b, 0);
  EXPECT_EQ(gs_network_edge_at(h.get(), 12, &e), GS_BAD_INPUT);
}

TEST(CApi, ParseErrors) {
  Handle bad("{\"rows\":1}");
  EXPECT_EQ(bad.status(), GS_BAD_INPUT);
  EXPECT_EQ(bad.get(), nullptr);
  EXPECT_NE(std::string(gs_last_error()), "");

  Handle negative(
      R"({"rows":2,"cols":2,"capacity":1,"transit":1,"supplies":[[-1,0],[0,0]]})");
  EXPECT_EQ(negative.status(), GS_BAD_INPUT);
  EXPECT_NE(std::string(gs_last_error()).find("negative supply at (0,0)"),
            std::string::npos);

  EXPECT_EQ(gs_network_parse(nullptr, 0, nullptr), GS_BAD_INPUT);
}

TEST(CApi, SolveEdge) {
  Handle h(kUnit3);
  gs_solve_result r{};
  ASSERT_EQ(gs_solve_edge(h.get(), Edge("1,0:1,1"), &r), GS_OK);
  EXPECT_EQ(r.theta_star.num, 5);
  EXPECT_EQ(r.theta_star.den, 1);
  EXPECT_EQ(r.y_star.num, 0);
  EXPECT_EQ(r.boundary, 1);

  gs_edge outside = {5, 5, 5, 6};
  EXPECT_EQ(gs_solve_edge(h.get(), outside, &r), GS_BAD_INPUT);
  gs_edge diagonal = {0, 0, 1, 1};
  EXPECT_EQ(gs_solve_edge(h.get(), diagonal, &r), GS_BAD_INPUT);
  gs_edge e{};
  EXPECT_EQ(gs_edge_parse("nonsense", &e), GS_BAD_INPUT);
}

TEST(CApi, GridJson) {
  Handle h(kUnit3);
  char* out = nullptr;
  ASSERT_EQ(gs_solve_grid_json(h.get(), 1, 0, &out), GS_OK);
  const json doc = json::parse(Take(out));
  EXPECT_EQ(doc["per_edge"].size(), 12u);
  EXPECT_EQ(doc["per_node"].size(), 9u);
  EXPECT_EQ(doc["theta_star"], json(5));
}

TEST(CApi, GuardViolation) {
  std::string doc = R"({"rows":21,"cols":20,"capacity":1,"transit":1,"supplies":[)";
  for (int r = 0; r < 21; ++r) {
    doc += r ? ",[" : "[";
    for (int c = 0; c < 20; ++c) doc += c ? ",1" : "1";
    doc += "]";
  }
  doc += "]}";
  Handle h(doc.c_str());
  ASSERT_EQ(h.status(), GS_OK);
  char* out = nullptr;
  EXPECT_EQ(gs_solve_grid_json(h.get(), 1, 0, &out), GS_GUARD);
  EXPECT_EQ(out, nullptr);
  EXPECT_EQ(gs_solve_grid_json(h.get(), 0, 0, &out), GS_OK);
  Take(out);
}

TEST(CApi, EnvelopeFormats) {
  Handle h(kUnit3);
  char* out = nullptr;
  ASSERT_EQ(gs_envelope_export(h.get(), Edge("1,0:1,1"), GS_FORMAT_CSV, &out),
            GS_OK);
  EXPECT_EQ(Take(out), "y,value,active_segment\n0,5,0\n1,5,0\n");
  ASSERT_EQ(gs_envelope_export(h.get(), Edge("1,0:1,1"), GS_FORMAT_JSON, &out),
            GS_OK);
  EXPECT_EQ(json::parse(Take(out))["minimum"]["value"], json(5));
}

TEST(CApi, Oracle) {
  Handle h(kUnit3);
  char* out = nullptr;
  gs_rational half{1, 2};
  ASSERT_EQ(gs_oracle_json(h.get(), Edge("1,0:1,1"), half, 0, 0, 1, &out),
            GS_OK);
  const json edge = json::parse(Take(out));
  ASSERT_EQ(edge.size(), 2u);
  EXPECT_EQ(edge[0]["query"]["kind"], json("theta_star"));
  EXPECT_EQ(edge[0]["value"], json(5));
  EXPECT_EQ(edge[1]["query"]["kind"], json("subset_max_theta"));
  EXPECT_EQ(edge[1]["value"], json(5));

  gs_edge centre = {1, 1, 1, 1};
  ASSERT_EQ(gs_oracle_json(h.get(), centre, half, 1, 0, 1, &out), GS_OK);
  EXPECT_EQ(json::parse(Take(out))[0]["value"], json(3));

  gs_rational third{1, 3};
  EXPECT_EQ(gs_oracle_json(h.get(), Edge("1,0:1,1"), third, 0, 0, 1, &out),
            GS_BAD_INPUT);
}

TEST(CApi, RationalParse) {
  gs_rational r{};
  EXPECT_EQ(gs_rational_parse("6/4", &r), GS_OK);
  EXPECT_EQ(r.num, 3);
  EXPECT_EQ(r.den, 2);
  EXPECT_EQ(gs_rational_parse("1/0", &r), GS_BAD_INPUT);
  EXPECT_EQ(gs_rational_parse("abc", &r), GS_BAD_INPUT);
}

TEST(CApi, VerifySmall) {
  const int32_t sizes[] = {2, 3};
  char* out = nullptr;
  EXPECT_EQ(gs_verify(nullptr, 1, sizes, 2, &out), GS_OK);
  const json doc = json::parse(Take(out));
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(doc["suites"].size(), 8u);
}

TEST(CApi, BenchRejectsSmallSizes) {
  const int32_t sizes[] = {8};
  char* out = nullptr;
  EXPECT_EQ(gs_bench(sizes, 1, 0, &out), GS_BAD_INPUT);
}

TEST(CApi, BenchRows) {
  const int32_t sizes[] = {16, 32};
  char* out = nullptr;
  ASSERT_EQ(gs_bench(sizes, 2, 0, &out), GS_OK);
  const json rows = json::parse(Take(out));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["n"], json(256));
  EXPECT_TRUE(rows[0]["ratio_weights"].is_null());
  EXPECT_TRUE(rows[1]["ratio_edge"].is_number());
}

}  // namespace
