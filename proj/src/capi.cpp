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

#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include "gridsink/bench.hpp"
#include "gridsink/errors.hpp"
#include "gridsink/network.hpp"
#include "gridsink/oracle.hpp"
#include "gridsink/report.hpp"
#include "gridsink/solver.hpp"
#include "gridsink/verify.hpp"

struct gs_network {
  gridsink::GridNetwork net;
};

namespace {

using gridsink::EdgeRef;
using gridsink::GridNetwork;
using gridsink::Rational;

thread_local std::string last_error;

gs_status Fail(gs_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
gs_status Guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const gridsink::InputError& e) {
    return Fail(GS_BAD_INPUT, e.what());
  } catch (const gridsink::GuardError& e) {
    return Fail(GS_GUARD, e.what());
  } catch (const gridsink::InternalError& e) {
    return Fail(GS_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(GS_BAD_INPUT, e.what());
  } catch (const std::out_of_range& e) {
    return Fail(GS_BAD_INPUT, e.what());
  } catch (const std::overflow_error& e) {
    return Fail(GS_BAD_INPUT, std::string("arithmetic overflow: ") + e.what());
  } catch (const std::exception& e) {
    return Fail(GS_INTERNAL, e.what());
  } catch (...) {
    return Fail(GS_INTERNAL, "unknown error");
  }
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gs_rational ToC(const Rational& r) { return {r.num(), r.den()}; }

Rational FromC(gs_rational r) {
  if (r.den == 0) throw gridsink::InputError("zero denominator");
  return Rational(r.num, r.den);
}

gs_edge ToC(const EdgeRef& e) {
  return {e.a.row, e.a.col, e.b.row, e.b.col};
}

EdgeRef FromC(const GridNetwork& net, gs_edge e) {
  const EdgeRef edge = [&] {
    try {
      return EdgeRef::Between({e.row_a, e.col_a}, {e.row_b, e.col_b});
    } catch (const std::invalid_argument& err) {
      throw gridsink::InputError(err.what());
    }
  }();
  if (!net.contains(edge)) {
    throw gridsink::InputError("edge " + edge.to_string() +
                               " is not in the grid");
  }
  return edge;
}

#define GS_REQUIRE(cond)                                       \
  do {                                                         \
    if (!(cond)) return Fail(GS_BAD_INPUT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* gs_last_error(void) { return last_error.c_str(); }

void gs_string_free(char* s) { delete[] s; }

gs_status gs_network_parse(const char* json, size_t len, gs_network** out) {
  GS_REQUIRE(json && out);
  return Guarded([&] {
    *out = new gs_network{gridsink::ParseNetwork(std::string_view(json, len))};
    return GS_OK;
  });
}

void gs_network_free(gs_network* net) { delete net; }

gs_status gs_network_dims(const gs_network* net, int32_t* rows,
                          int32_t* cols) {
  GS_REQUIRE(net && rows && cols);
  *rows = net->net.rows();
  *cols = net->net.cols();
  return GS_OK;
}

gs_status gs_network_edge_count(const gs_network* net, size_t* count) {
  GS_REQUIRE(net && count);
  const auto m = static_cast<size_t>(net->net.rows());
  const auto n = static_cast<size_t>(net->net.cols());
  *count = m * (n - 1) + (m - 1) * n;
  return GS_OK;
}

gs_status gs_network_edge_at(const gs_network* net, size_t index,
                             gs_edge* out) {
  GS_REQUIRE(net && out);
  return Guarded([&] {
    const auto edges = gridsink::EnumerateEdges(net->net);
    if (index >= edges.size()) {
      return Fail(GS_BAD_INPUT, "edge index out of range");
    }
    *out = ToC(edges[index]);
    return GS_OK;
  });
}

gs_status gs_rational_parse(const char* text, gs_rational* out) {
  GS_REQUIRE(text && out);
  return Guarded([&] {
    *out = ToC(Rational::Parse(text));
    return GS_OK;
  });
}

gs_status gs_edge_parse(const char* selector, gs_edge* out) {
  GS_REQUIRE(selector && out);
  return Guarded([&] {
    *out = ToC(EdgeRef::Parse(selector));
    return GS_OK;
  });
}

gs_status gs_solve_edge(const gs_network* net, gs_edge edge,
                        gs_solve_result* out) {
  GS_REQUIRE(net && out);
  return Guarded([&] {
    const auto r = gridsink::SolveEdge(net->net, FromC(net->net, edge));
    *out = {ToC(r.edge),       ToC(r.y_star), ToC(r.theta_star),
            r.boundary ? 1 : 0, r.binding_i,   r.binding_j};
    return GS_OK;
  });
}

gs_status gs_solve_edge_json(const gs_network* net, gs_edge edge,
                             char** json_out) {
  GS_REQUIRE(net && json_out);
  return Guarded([&] {
    const auto r = gridsink::SolveEdge(net->net, FromC(net->net, edge));
    *json_out = CopyString(gridsink::report::ToJson(r).dump());
    return GS_OK;
  });
}

gs_status gs_solve_grid_json(const gs_network* net, int include_nodes,
                             int oracle_steps, char** json_out) {
  GS_REQUIRE(net && json_out);
  return Guarded([&] {
    const auto g = gridsink::SolveGrid(net->net, include_nodes != 0,
                                       oracle_steps > 0 ? oracle_steps : 8);
    *json_out = CopyString(gridsink::report::ToJson(g).dump());
    return GS_OK;
  });
}

gs_status gs_envelope_export(const gs_network* net, gs_edge edge,
                             gs_format format, char** text_out) {
  GS_REQUIRE(net && text_out);
  return Guarded([&] {
    const auto sol =
        gridsink::SolveEdgeDetailed(net->net, FromC(net->net, edge));
    switch (format) {
      case GS_FORMAT_JSON:
        *text_out = CopyString(gridsink::report::EnvelopeJson(sol).dump());
        return GS_OK;
      case GS_FORMAT_CSV:
        *text_out = CopyString(gridsink::report::EnvelopeCsv(sol));
        return GS_OK;
    }
    return Fail(GS_BAD_INPUT, "unknown format");
  });
}

gs_status gs_oracle_json(const gs_network* net, gs_edge edge, gs_rational y,
                         int node_sink, int steps, int allow_waiting,
                         char** json_out) {
  GS_REQUIRE(net && json_out);
  return Guarded([&] {
    namespace report = gridsink::report;
    const GridNetwork& g = net->net;
    gridsink::oracle::Options options;
    if (steps > 0) options.steps = steps;
    options.allow_waiting = allow_waiting != 0;
    nlohmann::json records = nlohmann::json::array();
    if (node_sink) {
      const gridsink::Node v{edge.row_a, edge.col_a};
      if (!g.contains(v)) throw gridsink::InputError("node is not in the grid");
      records.push_back(
          {{"query",
            {{"kind", "node_time"},
             {"node", report::ToJson(v)},
             {"steps", options.steps},
             {"waiting", options.allow_waiting}}},
           {"value", report::ToJson(gridsink::oracle::NodeTime(g, v, options))}});
    } else {
      const EdgeRef e = FromC(g, edge);
      std::vector<Rational> ys;
      if (y.den == 0) {
        for (int k = 0; k <= options.steps; ++k) {
          ys.push_back(g.transit() * Rational(k, options.steps));
        }
      } else {
        ys.push_back(FromC(y));
      }
      const bool small =
          g.node_count() <= gridsink::oracle::kSubsetEnumerationNodes;
      for (const Rational& at : ys) {
        nlohmann::json query = {{"kind", "theta_star"},
                                {"edge", report::ToJson(e)},
                                {"y", report::ToJson(at)},
                                {"steps", options.steps},
                                {"waiting", options.allow_waiting}};
        records.push_back(
            {{"query", query},
             {"value", report::ToJson(
                           gridsink::oracle::ThetaStarOracle(g, e, at, options))}});
        if (small) {
          query = {{"kind", "subset_max_theta"},
                   {"edge", report::ToJson(e)},
                   {"y", report::ToJson(at)}};
          records.push_back(
              {{"query", query},
               {"value", report::ToJson(
                             gridsink::oracle::SubsetMaxTheta(g, e, at))}});
        }
      }
    }
    *json_out = CopyString(records.dump());
    return GS_OK;
  });
}

gs_status gs_verify(const gs_network* net, uint64_t seed, const int32_t* sizes,
                    size_t size_count, char** json_out) {
  GS_REQUIRE(json_out);
  return Guarded([&] {
    gridsink::verify::Options options;
    options.seed = seed;
    if (net) options.input = net->net;
    if (sizes) {
      options.sizes.assign(sizes, sizes + size_count);
      for (int s : options.sizes) {
        if (s < 2) throw gridsink::InputError("sizes must be at least 2");
      }
    }
    const auto results = gridsink::verify::RunAll(options);
    const auto doc = gridsink::verify::ToJson(results);
    *json_out = CopyString(doc.dump());
    return doc["passed"].get<bool>() ? GS_OK
                                     : Fail(GS_VERIFY_FAILED,
                                            "verification failed");
  });
}

gs_status gs_bench(const int32_t* sizes, size_t size_count, uint64_t seed,
                   char** json_out) {
  GS_REQUIRE(json_out && (sizes || size_count == 0));
  return Guarded([&] {
    std::vector<int> sides(sizes, sizes + size_count);
    if (sides.empty()) sides = {128, 256, 512};
    const auto rows = gridsink::bench::Run(sides, seed);
    *json_out = CopyString(gridsink::bench::ToJson(rows).dump());
    return GS_OK;
  });
}

}  // extern "C"
