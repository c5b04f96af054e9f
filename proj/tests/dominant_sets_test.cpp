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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gridsink/errors.hpp"
#include "gridsink/oracle.hpp"

namespace gridsink {
namespace {

GridNetwork Filled(int rows, int cols, const Rational& w) {
  return GridNetwork(rows, cols, 1, 1,
                     std::vector<Rational>(static_cast<std::size_t>(rows * cols), w));
}

class UnitGridTable : public ::testing::Test {
 protected:
  GridNetwork net = Filled(3, 3, 1);
  LocalFrame frame{net, EdgeRef::Parse("1,0:1,1")};
  BucketTable table = Bucketize(net, ClosedFormDistances(net, frame));
};

TEST_F(UnitGridTable, BucketsP) {
  // p has dp = 0, dq = 3.
  EXPECT_EQ(table.bucket(3, 0), Rational(1));
}

TEST_F(UnitGridTable, ConservesSupply) {
  Rational sum;
  for (int off : BucketTable::kOffsets) {
    for (int k = 0; k <= table.max_dp(); ++k) {
      EXPECT_GE(table.bucket(off, k), Rational(0));
      sum += table.bucket(off, k);
    }
  }
  EXPECT_EQ(sum, Rational(9));
  EXPECT_EQ(table.total(), Rational(9));
}

TEST_F(UnitGridTable, NeighboursOfP) {
  // Local (0,1) and (0,-1) both sit at (dp, dq) = (1, 2).
  EXPECT_EQ(table.bucket(1, 1), Rational(2));
}

TEST_F(UnitGridTable, Weights) {
  EXPECT_EQ(table.Weight(0, 0), Rational(9));
  EXPECT_EQ(table.Weight(2, 0), Rational(6));
  EXPECT_EQ(table.Weight(5, 0), Rational(0));
}

TEST_F(UnitGridTable, StreamingMatchesMaterialised) {
  const BucketTable streamed = Bucketize(net, frame);
  for (int i = 0; i <= 6; ++i) {
    for (int j = 0; j <= 6; ++j) {
      EXPECT_EQ(streamed.Weight(i, j), table.Weight(i, j));
    }
  }
}

TEST_F(UnitGridTable, FamilyEntries) {
  const auto family = DominantFamily(table);
  auto has = [&](DominantEntry e) {
    return std::find(family.begin(), family.end(), e) != family.end();
  };
  EXPECT_TRUE(has({0, 0, 9}));
  EXPECT_TRUE(has({2, 0, 6}));
  EXPECT_TRUE(has({3, 1, 3}));
  for (const auto& e : family) {
    EXPECT_LE(std::abs(e.i - e.j), 3);
    EXPECT_GT(e.weight, Rational(0));
  }
}

TEST(DominantFamily, SmallGridBound) {
  const auto net = Filled(2, 2, Rational(5, 2));
  for (const auto& edge : EnumerateEdges(net)) {
    const BucketTable table = Bucketize(net, LocalFrame(net, edge));
    EXPECT_EQ(table.max_dp(), 3);
    EXPECT_LE(DominantFamily(table).size(), 28u);
  }
}

TEST(DominantFamily, EmptyForZeroSupply) {
  const auto net = Filled(4, 3, 0);
  const BucketTable table = Bucketize(net, LocalFrame(net, EdgeRef::Parse("0,0:0,1")));
  EXPECT_TRUE(DominantFamily(table).empty());
}

TEST(Bucketize, RejectsImpossibleOffset) {
  const auto net = Filled(2, 2, 1);
  NodeDistances bad;
  bad.values.assign(4, DistancePair{2, 2});
  EXPECT_THROW(Bucketize(net, bad), InternalError);
}

TEST(Weight, MatchesDirectScan) {
  std::mt19937_64 rng(3);
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      std::vector<Rational> supplies;
      for (int k = 0; k < m * n; ++k) {
        supplies.emplace_back(static_cast<std::int64_t>(rng() % 7),
                              static_cast<std::int64_t>(rng() % 3 + 1));
      }
      const GridNetwork net(m, n, 1, 1, supplies);
      for (const auto& edge : EnumerateEdges(net)) {
        const LocalFrame frame(net, edge);
        const BucketTable table = Bucketize(net, frame);
        const auto bfs = oracle::BfsDistances(net, frame);
        const auto family = DominantFamily(table);
        EXPECT_LE(family.size(),
                  7 * static_cast<std::size_t>(table.max_dp() + 1));
        for (int i = 0; i <= table.max_dp(); ++i) {
          for (int j = std::max(0, i - 3); j <= std::min(i + 3, table.max_dq());
               ++j) {
            Rational naive;
            for (std::size_t k = 0; k < net.node_count(); ++k) {
              if (bfs[k].dp >= i && bfs[k].dq >= j) naive += supplies[k];
            }
            ASSERT_EQ(table.Weight(i, j), naive);
            EXPECT_LE(table.Weight(i + 1, j), naive);
            EXPECT_LE(table.Weight(i, j + 1), naive);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace gridsink
