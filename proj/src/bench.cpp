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

#include "gridsink/bench.hpp"

#include <algorithm>
#include <chrono>

#include "gridsink/dominant_sets.hpp"
#include "gridsink/errors.hpp"
#include "gridsink/report.hpp"
#include "gridsink/solver.hpp"
#include "gridsink/verify.hpp"

namespace gridsink::bench {

namespace {

template <typename F>
double Median(int repeats, F&& body) {
  std::vector<double> times;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - start;
    times.push_back(took.count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

std::vector<Row> Run(const std::vector<int>& sides, std::uint64_t seed,
                     int repeats) {
  for (int n : sides) {
    if (n < kMinSide) {
      throw InputError("bench sizes must be at least " +
                       std::to_string(kMinSide) + ", got " +
                       std::to_string(n));
    }
  }
  std::vector<Row> rows;
  for (int n : sides) {
    const GridNetwork net = verify::RandomGrid(n, n, seed);
    const EdgeRef edge = EdgeRef::Between({n / 2, n / 2 - 1}, {n / 2, n / 2});
    Row row;
    row.side = n;
    row.nodes = net.node_count();
    row.t_weights = Median(repeats, [&] {
      const BucketTable table = Bucketize(net, LocalFrame(net, edge));
      row.family_size = DominantFamily(table).size();
    });
    row.t_edge = Median(repeats, [&] {
      row.theta_star = SolveEdge(net, edge).theta_star;
    });
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json ToJson(const std::vector<Row>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Row& r = rows[k];
    nlohmann::json row = {{"N", r.side},
                          {"n", r.nodes},
                          {"t_weights", r.t_weights},
                          {"t_edge", r.t_edge},
                          {"family_size", r.family_size},
                          {"theta_star", report::ToJson(r.theta_star)}};
    if (k > 0) {
      row["ratio_weights"] = r.t_weights / rows[k - 1].t_weights;
      row["ratio_edge"] = r.t_edge / rows[k - 1].t_edge;
    } else {
      row["ratio_weights"] = nullptr;
      row["ratio_edge"] = nullptr;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace gridsink::bench
