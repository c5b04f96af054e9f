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

#include "gridsink/report.hpp"

#include <sstream>

namespace gridsink::report {

using nlohmann::json;

json ToJson(const Rational& r) {
  if (r.is_integer()) return r.num();
  return json::array({r.num(), r.den()});
}

Rational RationalFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2) {
    return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  }
  throw std::invalid_argument("not a rational: " + j.dump());
}

json ToJson(Node v) { return json::array({v.row, v.col}); }

json ToJson(const EdgeRef& e) {
  return {{"a", ToJson(e.a)}, {"b", ToJson(e.b)}};
}

json ToJson(const SolveResult& r) {
  return {{"edge", ToJson(r.edge)},
          {"y_star", ToJson(r.y_star)},
          {"theta_star", ToJson(r.theta_star)},
          {"boundary", r.boundary},
          {"binding", json::array({r.binding_i, r.binding_j})}};
}

json ToJson(const GridSolution& g) {
  json doc = ToJson(g.best);
  json per_edge = json::array();
  for (const auto& r : g.per_edge) per_edge.push_back(ToJson(r));
  doc["per_edge"] = std::move(per_edge);
  if (g.best_node) {
    json per_node = json::array();
    for (const auto& n : g.per_node) {
      per_node.push_back({{"node", ToJson(n.node)}, {"time", ToJson(n.time)}});
    }
    doc["per_node"] = std::move(per_node);
    if (g.node_is_best) {
      doc["best_placement"] = {{"kind", "node"},
                               {"node", ToJson(g.best_node->node)},
                               {"time", ToJson(g.best_node->time)}};
    } else {
      doc["best_placement"] = {{"kind", "edge"},
                               {"edge", ToJson(g.best.edge)},
                               {"y", ToJson(g.best.y_star)},
                               {"time", ToJson(g.best.theta_star)}};
    }
  }
  return doc;
}

json EnvelopeJson(const EdgeSolution& s) {
  json points = json::array();
  for (const auto& bp : s.envelope.BreakPoints()) {
    json row = {{"y", ToJson(bp.y)},
                {"value", ToJson(bp.value)},
                {"active_segment", bp.segment}};
    if (!s.family.empty()) {
      const auto& e = s.family[s.segment_owner[bp.segment]];
      row["binding"] = json::array({e.i, e.j});
    }
    points.push_back(std::move(row));
  }
  return {{"edge", ToJson(s.result.edge)},
          {"break_points", std::move(points)},
          {"minimum",
           {{"y", ToJson(s.result.y_star)},
            {"value", ToJson(s.result.theta_star)}}}};
}

std::string EnvelopeCsv(const EdgeSolution& s) {
  std::ostringstream os;
  os << "y,value,active_segment\n";
  for (const auto& bp : s.envelope.BreakPoints()) {
    os << bp.y << ',' << bp.value << ',' << bp.segment << '\n';
  }
  return os.str();
}

}  // namespace gridsink::report
