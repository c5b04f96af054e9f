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

#ifndef GRIDSINK_ORACLE_HPP_
#define GRIDSINK_ORACLE_HPP_

#include <cstddef>
#include <span>
#include <utility>

#include "gridsink/network.hpp"
#include "gridsink/rational.hpp"

// Flow-based reference computations. Nothing in here uses the closed forms
// of the solver path; these exist to check them.
namespace gridsink::oracle {

inline constexpr std::size_t kDeskScaleNodes = 400;
inline constexpr std::size_t kSubsetEnumerationNodes = 16;

struct Options {
  // Time step is transit / steps.
  int steps = 8;
  // Holdover at every node. When false only a source's own supply may wait
  // at its origin; flow in transit may not be stored.
  bool allow_waiting = true;
};

// Breadth-first hop counts to p and q with the arcs p->q and q->p deleted.
NodeDistances BfsDistances(const GridNetwork& net, const LocalFrame& frame);

// Lengths of the two augmenting paths found by successive shortest paths
// from `sources` to the sink placed y from p on `edge` (unit capacities,
// label-correcting search over the residual network). Requires 0 < y < transit.
std::pair<Rational, Rational> SspLengths(const GridNetwork& net,
                                         const EdgeRef& edge,
                                         const Rational& y,
                                         std::span<const Node> sources);

// Maximum amount delivered to the split-edge sink by time theta, computed on
// a time-expanded network with step transit/options.steps. Both y and theta
// must be multiples of that step. Sources have unlimited supply unless
// supply_capped, in which case each source holds its own supply.
Rational MaxAmount(const GridNetwork& net, const EdgeRef& edge,
                   const Rational& y, std::span<const Node> sources,
                   const Rational& theta, bool supply_capped,
                   const Options& options = {});

// Smallest horizon at which all supply reaches the split-edge sink; y must
// be on the options.steps grid. Exact for rational inputs.
Rational ThetaStarOracle(const GridNetwork& net, const EdgeRef& edge,
                         const Rational& y, const Options& options = {});

// Same quantity with the sink at a grid node of the unsplit grid.
Rational NodeTime(const GridNetwork& net, Node sink,
                  const Options& options = {});

// Max over every non-empty node subset of its completion time, using BFS set
// distances. Exponential; guarded to kSubsetEnumerationNodes nodes.
Rational SubsetMaxTheta(const GridNetwork& net, const EdgeRef& edge,
                        const Rational& y);

}  // namespace gridsink::oracle

#endif  // GRIDSINK_ORACLE_HPP_
