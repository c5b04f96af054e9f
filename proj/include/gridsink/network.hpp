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

#ifndef GRIDSINK_NETWORK_HPP_
#define GRIDSINK_NETWORK_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridsink/rational.hpp"

namespace gridsink {

struct Node {
  int row = 0;
  int col = 0;

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

enum class Orientation { kHorizontal, kVertical };

// Undirected grid edge. `a` is the lexicographically smaller endpoint and
// plays the role of p; `b` plays q.
struct EdgeRef {
  Node a;
  Node b;
  Orientation orientation = Orientation::kHorizontal;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef& x, const EdgeRef& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }

  // Builds an edge from two grid-adjacent nodes in either order.
  static EdgeRef Between(Node u, Node v);

  // "r1,c1:r2,c2"
  static EdgeRef Parse(std::string_view selector);
  std::string to_string() const;
};

// Uniform-capacity, uniform-transit M x N grid with per-node supplies.
class GridNetwork {
 public:
  GridNetwork(int rows, int cols, Rational capacity, Rational transit,
              std::vector<Rational> supplies);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t node_count() const { return supplies_.size(); }
  const Rational& capacity() const { return capacity_; }
  const Rational& transit() const { return transit_; }

  const Rational& supply(Node v) const { return supplies_[index(v)]; }
  std::span<const Rational> supplies() const { return supplies_; }
  const Rational& total_supply() const { return total_supply_; }

  std::size_t index(Node v) const {
    return static_cast<std::size_t>(v.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(v.col);
  }
  Node node_at(std::size_t idx) const {
    return {static_cast<int>(idx / static_cast<std::size_t>(cols_)),
            static_cast<int>(idx % static_cast<std::size_t>(cols_))};
  }
  bool contains(Node v) const {
    return v.row >= 0 && v.row < rows_ && v.col >= 0 && v.col < cols_;
  }
  bool contains(const EdgeRef& e) const;

  // Grid neighbours of v in the fixed order up, down, left, right.
  int neighbors(Node v, std::array<Node, 4>& out) const;

 private:
  int rows_;
  int cols_;
  Rational capacity_;
  Rational transit_;
  std::vector<Rational> supplies_;
  Rational total_supply_;
};

// Parses the JSON network document. Throws InputError with context.
GridNetwork ParseNetwork(std::string_view text);

// All undirected edges, lexicographic by (a, b); 2MN - M - N of them.
std::vector<EdgeRef> EnumerateEdges(const GridNetwork& net);

struct LocalPoint {
  int i = 0;
  int j = 0;
  friend bool operator==(const LocalPoint&, const LocalPoint&) = default;
};

// Embedding of the grid that places p = edge.a at (0,0) and q = edge.b at
// (1,0). Horizontal edge a=(r,k): (r',k') -> (k'-k, r-r'). Vertical edge
// a=(r,k): (r',k') -> (r'-r, k'-k). Both maps are proper rotations.
class LocalFrame {
 public:
  LocalFrame(const GridNetwork& net, const EdgeRef& edge);

  const EdgeRef& edge() const { return edge_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  LocalPoint ToLocal(Node v) const {
    if (edge_.orientation == Orientation::kHorizontal) {
      return {v.col - edge_.a.col, edge_.a.row - v.row};
    }
    return {v.row - edge_.a.row, v.col - edge_.a.col};
  }
  Node ToGrid(LocalPoint pt) const {
    if (edge_.orientation == Orientation::kHorizontal) {
      return {edge_.a.row - pt.j, edge_.a.col + pt.i};
    }
    return {edge_.a.row + pt.i, edge_.a.col + pt.j};
  }

 private:
  EdgeRef edge_;
  int rows_;
  int cols_;
};

inline LocalFrame BuildFrame(const GridNetwork& net, const EdgeRef& edge) {
  return LocalFrame(net, edge);
}

// Hop distances (units of transit time) to p and to q in the grid with the
// two arcs between p and q removed.
struct DistancePair {
  int dp = 0;
  int dq = 0;
  friend bool operator==(const DistancePair&, const DistancePair&) = default;
};

// Closed form for a single local point.
inline DistancePair ClosedFormDistance(LocalPoint pt) {
  const int ai = pt.i < 0 ? -pt.i : pt.i;
  const int aj = pt.j < 0 ? -pt.j : pt.j;
  const int ai1 = pt.i - 1 < 0 ? 1 - pt.i : pt.i - 1;
  DistancePair d{ai + aj, ai1 + aj};
  // Row 0 on the far side of the removed edge detours through an adjacent row.
  if (pt.j == 0 && pt.i >= 1) d.dp = pt.i + 2;
  if (pt.j == 0 && pt.i <= 0) d.dq = 3 - pt.i;
  return d;
}

// Per-node distances indexed like GridNetwork::supplies().
struct NodeDistances {
  std::vector<DistancePair> values;
  const DistancePair& operator[](std::size_t idx) const { return values[idx]; }
  std::size_t size() const { return values.size(); }
};

NodeDistances ClosedFormDistances(const GridNetwork& net,
                                  const LocalFrame& frame);

// Componentwise minima over a non-empty node set.
DistancePair SetDistances(std::span<const Node> members,
                          const GridNetwork& net, const NodeDistances& dists);

}  // namespace gridsink

#endif  // GRIDSINK_NETWORK_HPP_
