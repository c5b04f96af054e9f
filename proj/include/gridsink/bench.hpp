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

#ifndef GRIDSINK_BENCH_HPP_
#define GRIDSINK_BENCH_HPP_

#include <cstdint>
#include <vector>

#include "gridsink/rational.hpp"
#include "json.hpp"

namespace gridsink::bench {

inline constexpr int kMinSide = 16;

struct Row {
  int side = 0;
  std::size_t nodes = 0;
  double t_weights = 0;  // seconds, median of `repeats`
  double t_edge = 0;
  std::size_t family_size = 0;
  Rational theta_star;  // of the centre edge
};

// Times the weight pass and one edge solve on seeded random N x N grids.
// Throws InputError for sides below kMinSide.
std::vector<Row> Run(const std::vector<int>& sides, std::uint64_t seed,
                     int repeats = 5);

// Rows plus ratios against the previous row.
nlohmann::json ToJson(const std::vector<Row>& rows);

}  // namespace gridsink::bench

#endif  // GRIDSINK_BENCH_HPP_
