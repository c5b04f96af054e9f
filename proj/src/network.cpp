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

#include "gridsink/network.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gridsink/errors.hpp"
#include "json.hpp"

namespace gridsink {

namespace {

std::string NodeText(Node v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

int ParseInt(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InputError("malformed integer '" + std::string(s) + "'");
  }
  return v;
}

Rational JsonRational(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer()) {
    const auto den = j[1].get<std::int64_t>();
    if (den <= 0) {
      throw InputError(what + ": denominator must be positive");
    }
    return Rational(j[0].get<std::int64_t>(), den);
  }
  throw InputError(what + ": expected integer or [num, den]");
}

}  // namespace

EdgeRef EdgeRef::Between(Node u, Node v) {
  const int dr = v.row - u.row;
  const int dc = v.col - u.col;
  if (std::abs(dr) + std::abs(dc) != 1) {
    throw std::invalid_argument("nodes " + NodeText(u) + " and " +
                                NodeText(v) + " are not grid-adjacent");
  }
  EdgeRef e;
  e.a = std::min(u, v);
  e.b = std::max(u, v);
  e.orientation = dr == 0 ? Orientation::kHorizontal : Orientation::kVertical;
  return e;
}

EdgeRef EdgeRef::Parse(std::string_view selector) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("edge selector must look like r1,c1:r2,c2");
  }
  auto parse_node = [](std::string_view s) {
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) {
      throw InputError("edge selector must look like r1,c1:r2,c2");
    }
    return Node{ParseInt(s.substr(0, comma)), ParseInt(s.substr(comma + 1))};
  };
  const Node u = parse_node(selector.substr(0, colon));
  const Node v = parse_node(selector.substr(colon + 1));
  try {
    return Between(u, v);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string EdgeRef::to_string() const {
  return std::to_string(a.row) + "," + std::to_string(a.col) + ":" +
         std::to_string(b.row) + "," + std::to_string(b.col);
}

GridNetwork::GridNetwork(int rows, int cols, Rational capacity,
                         Rational transit, std::vector<Rational> supplies)
    : rows_(rows),
      cols_(cols),
      capacity_(capacity),
      transit_(transit),
      supplies_(std::move(supplies)) {
  if (rows_ < 2 || cols_ < 2) {
    throw InputError("grid must be at least 2×2");
  }
  if (capacity_.sign() <= 0) throw InputError("capacity must be positive");
  if (transit_.sign() <= 0) throw InputError("transit must be positive");
  if (supplies_.size() !=
      static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
    throw InputError("supply count does not match rows*cols");
  }
  for (std::size_t k = 0; k < supplies_.size(); ++k) {
    if (supplies_[k].sign() < 0) {
      throw InputError("negative supply at " + NodeText(node_at(k)));
    }
    total_supply_ += supplies_[k];
  }
}

bool GridNetwork::contains(const EdgeRef& e) const {
  if (!contains(e.a) || !contains(e.b)) return false;
  const int dr = e.b.row - e.a.row;
  const int dc = e.b.col - e.a.col;
  if (e.orientation == Orientation::kHorizontal) return dr == 0 && dc == 1;
  return dr == 1 && dc == 0;
}

int GridNetwork::neighbors(Node v, std::array<Node, 4>& out) const {
  int n = 0;
  if (v.row > 0) out[n++] = {v.row - 1, v.col};
  if (v.row + 1 < rows_) out[n++] = {v.row + 1, v.col};
  if (v.col > 0) out[n++] = {v.row, v.col - 1};
  if (v.col + 1 < cols_) out[n++] = {v.row, v.col + 1};
  return n;
}

GridNetwork ParseNetwork(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  for (const char* key : {"rows", "cols", "capacity", "transit", "supplies"}) {
    if (!doc.contains(key)) {
      throw InputError(std::string("missing field '") + key + "'");
    }
  }
  if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
    throw InputError("rows and cols must be integers");
  }
  const auto rows = doc["rows"].get<std::int64_t>();
  const auto cols = doc["cols"].get<std::int64_t>();
  if (rows < 2 || cols < 2) throw InputError("grid must be at least 2×2");
  if (rows > 100000 || cols > 100000 || rows * cols > 50'000'000) {
    throw InputError("grid too large");
  }
  const Rational capacity = JsonRational(doc["capacity"], "capacity");
  const Rational transit = JsonRational(doc["transit"], "transit");
  const auto& rows_json = doc["supplies"];
  if (!rows_json.is_array() ||
      rows_json.size() != static_cast<std::size_t>(rows)) {
    throw InputError("supplies must be an array of " + std::to_string(rows) +
                     " rows");
  }
  std::vector<Rational> supplies;
  supplies.reserve(static_cast<std::size_t>(rows * cols));
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto& row = rows_json[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
      throw InputError("supplies row " + std::to_string(r) + " must have " +
                       std::to_string(cols) + " entries");
    }
    for (std::int64_t c = 0; c < cols; ++c) {
      const std::string where =
          "(" + std::to_string(r) + "," + std::to_string(c) + ")";
      const Rational w =
          JsonRational(row[static_cast<std::size_t>(c)], "supply at " + where);
      if (w.sign() < 0) throw InputError("negative supply at " + where);
      supplies.push_back(w);
    }
  }
  return GridNetwork(static_cast<int>(rows), static_cast<int>(cols), capacity,
                     transit, std::move(supplies));
}

std::vector<EdgeRef> EnumerateEdges(const GridNetwork& net) {
  std::vector<EdgeRef> edges;
  edges.reserve(static_cast<std::size_t>(2 * net.rows() * net.cols() -
                                         net.rows() - net.cols()));
  // (r,c) precedes both (r,c+1) and (r+1,c); emitting the horizontal edge
  // first keeps the list sorted by (a, b).
  for (int r = 0; r < net.rows(); ++r) {
    for (int c = 0; c < net.cols(); ++c) {
      if (c + 1 < net.cols()) {
        edges.push_back({{r, c}, {r, c + 1}, Orientation::kHorizontal});
      }
      if (r + 1 < net.rows()) {
        edges.push_back({{r, c}, {r + 1, c}, Orientation::kVertical});
      }
    }
  }
  return edges;
}

LocalFrame::LocalFrame(const GridNetwork& net, const EdgeRef& edge)
    : edge_(edge), rows_(net.rows()), cols_(net.cols()) {
  if (!net.contains(edge)) {
    throw std::invalid_argument("edge " + edge.to_string() +
                                " is not in the network");
  }
}

NodeDistances ClosedFormDistances(const GridNetwork& net,
                                  const LocalFrame& frame) {
  NodeDistances out;
  out.values.resize(net.node_count());
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    out.values[k] = ClosedFormDistance(frame.ToLocal(net.node_at(k)));
  }
  return out;
}

DistancePair SetDistances(std::span<const Node> members,
                          const GridNetwork& net, const NodeDistances& dists) {
  if (members.empty()) {
    throw std::invalid_argument("set distances of an empty set");
  }
  DistancePair best = dists[net.index(members.front())];
  for (const Node& v : members.subspan(1)) {
    const DistancePair& d = dists[net.index(v)];
    best.dp = std::min(best.dp, d.dp);
    best.dq = std::min(best.dq, d.dq);
  }
  return best;
}

}  // namespace gridsink
