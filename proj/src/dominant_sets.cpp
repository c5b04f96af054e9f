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

#include "gridsink/dominant_sets.hpp"

#include <algorithm>

#include "gridsink/errors.hpp"

namespace gridsink {

namespace {
const Rational kZero;
}  // namespace

void BucketTable::Add(DistancePair d, const Rational& w) {
  const int offset = d.dq - d.dp;
  if (offset != -3 && offset != -1 && offset != 1 && offset != 3) {
    throw InternalError("distance pair (" + std::to_string(d.dp) + "," +
                        std::to_string(d.dq) + ") has offset " +
                        std::to_string(offset));
  }
  auto& row = buckets_[Slot(offset)];
  if (row.size() <= static_cast<std::size_t>(d.dp)) {
    row.resize(static_cast<std::size_t>(d.dp) + 1);
  }
  if (!w.is_zero()) row[static_cast<std::size_t>(d.dp)] += w;
  max_dp_ = std::max(max_dp_, d.dp);
  max_dq_ = std::max(max_dq_, d.dq);
}

void BucketTable::Finish() {
  for (std::size_t s = 0; s < 4; ++s) {
    auto& row = buckets_[s];
    row.resize(static_cast<std::size_t>(max_dp_) + 1);
    auto& suf = suffix_[s];
    suf.assign(row.size() + 1, Rational());
    for (std::size_t k = row.size(); k-- > 0;) suf[k] = suf[k + 1] + row[k];
    total_ += suf[0];
  }
}

const Rational& BucketTable::bucket(int offset, int k) const {
  const auto& row = buckets_[Slot(offset)];
  if (k < 0 || static_cast<std::size_t>(k) >= row.size()) return kZero;
  return row[static_cast<std::size_t>(k)];
}

const Rational& BucketTable::suffix(int offset, int k) const {
  const auto& suf = suffix_[Slot(offset)];
  if (k < 0) k = 0;
  if (static_cast<std::size_t>(k) >= suf.size()) return kZero;
  return suf[static_cast<std::size_t>(k)];
}

Rational BucketTable::Weight(int i, int j) const {
  if (i < 0 || j < 0) throw std::invalid_argument("negative set index");
  Rational w;
  for (int offset : kOffsets) w += suffix(offset, std::max(i, j - offset));
  return w;
}

BucketTable Bucketize(const GridNetwork& net, const NodeDistances& dists) {
  if (dists.size() != net.node_count()) {
    throw std::invalid_argument("distance table does not match network");
  }
  BucketTable table;
  const auto supplies = net.supplies();
  for (std::size_t k = 0; k < supplies.size(); ++k) {
    table.Add(dists[k], supplies[k]);
  }
  table.Finish();
  return table;
}

BucketTable Bucketize(const GridNetwork& net, const LocalFrame& frame) {
  BucketTable table;
  const auto supplies = net.supplies();
  std::size_t k = 0;
  for (int r = 0; r < net.rows(); ++r) {
    for (int c = 0; c < net.cols(); ++c, ++k) {
      table.Add(ClosedFormDistance(frame.ToLocal({r, c})), supplies[k]);
    }
  }
  table.Finish();
  return table;
}

std::vector<DominantEntry> DominantFamily(const BucketTable& table) {
  std::vector<DominantEntry> family;
  for (int i = 0; i <= table.max_dp(); ++i) {
    const int j_hi = std::min(i + 3, table.max_dq());
    for (int j = std::max(0, i - 3); j <= j_hi; ++j) {
      Rational w = table.Weight(i, j);
      if (w.sign() > 0) family.push_back({i, j, w});
    }
  }
  return family;
}

}  // namespace gridsink
