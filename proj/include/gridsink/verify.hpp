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

#ifndef GRIDSINK_VERIFY_HPP_
#define GRIDSINK_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridsink/network.hpp"
#include "json.hpp"

// Self-check suites comparing the solver path against the flow oracles on
// seeded random instances.
namespace gridsink::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string counterexample;  // first failure, empty when passed
};

struct Options {
  std::uint64_t seed = 0;
  // Grid side lengths to sweep. Each suite caps them at what it can afford.
  std::vector<int> sizes = {2, 3, 4, 5, 6, 7, 8};
  // When set, the network-level suites run on this network instead.
  std::optional<GridNetwork> input;
  // Distance formula under test; replaceable for mutation testing.
  std::function<DistancePair(LocalPoint)> closed_form = ClosedFormDistance;
};

SuiteResult DistanceOracle(const Options& options);
SuiteResult NodeOffsets(const Options& options);
SuiteResult SetOffsets(const Options& options, int subsets_per_grid = 1000);
SuiteResult Weights(const Options& options);
SuiteResult ThetaShape(const Options& options, int samples = 500);
SuiteResult EnvelopeKernel(const Options& options, int sets = 1000,
                           int samples = 256);
SuiteResult SuccessivePaths(const Options& options, int subsets_per_grid = 100);
SuiteResult Triangle(const Options& options);
// Envelope, subset enumeration and flow oracle on every edge of each network
// at y = k*transit/8. Networks must have at most 16 nodes.
SuiteResult Triangle(std::span<const GridNetwork> nets);

std::vector<SuiteResult> RunAll(const Options& options);
nlohmann::json ToJson(const std::vector<SuiteResult>& results);

// Seeded grid with integer supplies drawn uniformly from [0, max_supply].
GridNetwork RandomGrid(int rows, int cols, std::uint64_t seed,
                       int max_supply = 10);
GridNetwork UniformGrid(int rows, int cols, const Rational& supply = 1);

}  // namespace gridsink::verify

#endif  // GRIDSINK_VERIFY_HPP_
