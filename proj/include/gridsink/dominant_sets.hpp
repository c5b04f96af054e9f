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

#ifndef GRIDSINK_DOMINANT_SETS_HPP_
#define GRIDSINK_DOMINANT_SETS_HPP_

#include <array>
#include <vector>

#include "gridsink/network.hpp"
#include "gridsink/rational.hpp"

namespace gridsink {

// Supplies grouped by (dp, dq - dp). The offset dq - dp only takes the
// values -3, -1, 1, 3 on a grid split at one edge, so four arrays indexed by
// dp cover every node.
class BucketTable {
 public:
  static constexpr std::array<int, 4> kOffsets = {-3, -1, 1, 3};

  // Supply of nodes with dp == k and dq - dp == offset.
  const Rational& bucket(int offset, int k) const;
  // Supply of nodes with dp >= k and dq - dp == offset.
  const Rational& suffix(int offset, int k) const;

  int max_dp() const { return max_dp_; }
  int max_dq() const { return max_dq_; }
  const Rational& total() const { return total_; }

  // Total supply of X_{i,j} = {x : dp(x) >= i, dq(x) >= j}.
  Rational Weight(int i, int j) const;

 private:
  friend BucketTable Bucketize(const GridNetwork&, const NodeDistances&);
  friend BucketTable Bucketize(const GridNetwork&, const LocalFrame&);

  void Add(DistancePair d, const Rational& w);
  void Finish();
  static int Slot(int offset) { return (offset + 3) / 2; }

  std::array<std::vector<Rational>, 4> buckets_;
  std::array<std::vector<Rational>, 4> suffix_;
  int max_dp_ = 0;
  int max_dq_ = 0;
  Rational total_;
};

BucketTable Bucketize(const GridNetwork& net, const NodeDistances& dists);
// Same table, computing distances on the fly without materializing them.
BucketTable Bucketize(const GridNetwork& net, const LocalFrame& frame);

struct DominantEntry {
  int i = 0;
  int j = 0;
  Rational weight;
  friend bool operator==(const DominantEntry&, const DominantEntry&) = default;
};

// Non-empty dominant sets: i in [0, max_dp], j in [max(0,i-3), i+3] clipped
// to [0, max_dq], ordered by (i, j).
std::vector<DominantEntry> DominantFamily(const BucketTable& table);

}  // namespace gridsink

#endif  // GRIDSINK_DOMINANT_SETS_HPP_
