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

#ifndef GRIDSINK_SOLVER_HPP_
#define GRIDSINK_SOLVER_HPP_

#include <optional>
#include <vector>

#include "gridsink/dominant_sets.hpp"
#include "gridsink/envelope.hpp"
#include "gridsink/network.hpp"
#include "gridsink/rational.hpp"

namespace gridsink {

struct SolveResult {
  EdgeRef edge;
  Rational y_star;
  Rational theta_star;
  bool boundary = false;  // y_star is 0 or transit
  int binding_i = 0;
  int binding_j = 0;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

// Everything the per-edge pipeline produced, for export and inspection.
struct EdgeSolution {
  SolveResult result;
  std::vector<DominantEntry> family;
  std::vector<std::size_t> segment_owner;  // segment -> family index
  UpperEnvelope envelope;
};

EdgeSolution SolveEdgeDetailed(const GridNetwork& net, const EdgeRef& edge);
SolveResult SolveEdge(const GridNetwork& net, const EdgeRef& edge);

struct NodeResult {
  Node node;
  Rational time;
};

struct GridSolution {
  SolveResult best;                 // best edge placement
  std::vector<SolveResult> per_edge;  // enumeration order
  std::vector<NodeResult> per_node;   // empty unless nodes were requested
  std::optional<NodeResult> best_node;
  // True when a node placement beats every edge placement strictly.
  bool node_is_best = false;
};

GridSolution SolveGrid(const GridNetwork& net, bool include_nodes,
                       int oracle_steps = 8);

// Completion time with the sink at a node; desk-scale only.
Rational SolveNode(const GridNetwork& net, Node node, int oracle_steps = 8);

}  // namespace gridsink

#endif  // GRIDSINK_SOLVER_HPP_
