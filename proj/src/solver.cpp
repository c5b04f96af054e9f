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

#include "gridsink/solver.hpp"

#include "gridsink/completion_time.hpp"
#include "gridsink/errors.hpp"
#include "gridsink/oracle.hpp"

namespace gridsink {

EdgeSolution SolveEdgeDetailed(const GridNetwork& net, const EdgeRef& edge) {
  const LocalFrame frame = BuildFrame(net, edge);
  const BucketTable table = Bucketize(net, frame);
  std::vector<DominantEntry> family = DominantFamily(table);

  const FlowParams params{net.capacity(), net.transit()};
  std::vector<ThetaCurve> curves;
  curves.reserve(family.size() + 1);
  for (const auto& e : family) curves.emplace_back(e.weight, e.i, e.j, params);
  if (curves.empty()) curves.emplace_back(Rational(0), 0, 0, params);

  CurveSegments segs = CurvesToSegments(curves);
  UpperEnvelope env = BuildUpperEnvelope(std::move(segs.segments));
  const Minimum best = MinimizeEnvelope(env);

  SolveResult result;
  result.edge = edge;
  result.y_star = best.y;
  result.theta_star = best.value;
  result.boundary = best.y.is_zero() || best.y == net.transit();
  if (!family.empty()) {
    const auto seg = env.ActiveSegment(best.y);
    if (!seg) throw InternalError("envelope has no active segment at y*");
    const DominantEntry& e = family[segs.owner[*seg]];
    result.binding_i = e.i;
    result.binding_j = e.j;
  }
  return {result, std::move(family), std::move(segs.owner), std::move(env)};
}

SolveResult SolveEdge(const GridNetwork& net, const EdgeRef& edge) {
  return SolveEdgeDetailed(net, edge).result;
}

Rational SolveNode(const GridNetwork& net, Node node, int oracle_steps) {
  oracle::Options options;
  options.steps = oracle_steps;
  return oracle::NodeTime(net, node, options);
}

GridSolution SolveGrid(const GridNetwork& net, bool include_nodes,
                       int oracle_steps) {
  if (oracle_steps <= 0) throw std::invalid_argument("steps must be positive");
  if (include_nodes && net.node_count() > oracle::kDeskScaleNodes) {
    throw GuardError("node placements limited to " +
                     std::to_string(oracle::kDeskScaleNodes) +
                     " nodes, network has " +
                     std::to_string(net.node_count()));
  }
  GridSolution out;
  const auto edges = EnumerateEdges(net);
  out.per_edge.reserve(edges.size());
  for (const auto& e : edges) out.per_edge.push_back(SolveEdge(net, e));
  // Edges arrive in lexicographic order, so keeping the first strict
  // improvement implements the (theta, edge) tie-break.
  out.best = out.per_edge.front();
  for (const auto& r : out.per_edge) {
    if (r.theta_star < out.best.theta_star) out.best = r;
  }
  if (include_nodes) {
    for (std::size_t k = 0; k < net.node_count(); ++k) {
      const Node v = net.node_at(k);
      out.per_node.push_back({v, SolveNode(net, v, oracle_steps)});
      if (!out.best_node || out.per_node.back().time < out.best_node->time) {
        out.best_node = out.per_node.back();
      }
    }
    out.node_is_best = out.best_node->time < out.best.theta_star;
  }
  return out;
}

}  // namespace gridsink
