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

#include "gridsink/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gridsink/completion_time.hpp"
#include "gridsink/errors.hpp"

namespace gridsink {
namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

GridNetwork Filled(int rows, int cols, const Rational& w) {
  return GridNetwork(rows, cols, 1, 1,
                     std::vector<Rational>(static_cast<std::size_t>(rows * cols), w));
}

GridNetwork Random(int rows, int cols, std::mt19937_64& rng) {
  std::vector<Rational> w;
  for (int k = 0; k < rows * cols; ++k) {
    w.emplace_back(static_cast<std::int64_t>(rng() % 11));
  }
  return GridNetwork(rows, cols, 1, 1, w);
}

TEST(BfsDistances, Examples) {
  const auto net = Filled(3, 3, 1);
  const LocalFrame frame(net, EdgeRef::Parse("1,0:1,1"));
  const auto d = oracle::BfsDistances(net, frame);
  EXPECT_EQ(d[net.index({1, 1})].dp, 3);  // q to p
  EXPECT_EQ(d[net.index({1, 0})].dp, 0);
  EXPECT_EQ(d[net.index(frame.ToGrid({2, 0}))].dp, 4);
}

TEST(SspLengths, Examples) {
  const auto net = Filled(2, 2, 1);
  const auto edge = EdgeRef::Parse("1,0:1,1");
  const LocalFrame frame(net, edge);
  const Node p = frame.ToGrid({0, 0});
  const Node q = frame.ToGrid({1, 0});
  const Node side = frame.ToGrid({0, 1});
  EXPECT_EQ(oracle::SspLengths(net, edge, R(1, 2), std::vector{side}),
            std::make_pair(R(3, 2), R(5, 2)));
  EXPECT_EQ(oracle::SspLengths(net, edge, R(1, 2), std::vector{p, q}),
            std::make_pair(R(1, 2), R(1, 2)));
  EXPECT_EQ(oracle::SspLengths(net, edge, R(1, 2), std::vector{p}),
            std::make_pair(R(1, 2), R(7, 2)));
  EXPECT_THROW(oracle::SspLengths(net, edge, R(0), std::vector{p}),
               std::out_of_range);
}

TEST(MaxAmount, Examples) {
  const auto net = Filled(3, 3, 1);
  const auto edge = EdgeRef::Parse("1,0:1,1");
  const std::vector<Node> q = {{1, 1}};
  const oracle::Options d2{2, true};
  EXPECT_EQ(oracle::MaxAmount(net, edge, R(1, 2), q, R(1, 2), false, d2), R(0));
  EXPECT_EQ(oracle::MaxAmount(net, edge, R(1, 2), q, R(3, 2), false, d2), R(1));
  EXPECT_EQ(oracle::MaxAmount(net, edge, R(1, 2), q, R(3), false, d2), R(5, 2));
  EXPECT_THROW(oracle::MaxAmount(net, edge, R(1, 3), q, R(3), false, d2),
               std::invalid_argument);
  EXPECT_THROW(oracle::MaxAmount(net, edge, R(1, 2), q, R(7, 3), false, d2),
               std::invalid_argument);
}

TEST(MaxAmount, MatchesArrivalFormula) {
  std::mt19937_64 rng(5);
  const oracle::Options opts{4, true};
  const FlowParams params{1, 1};
  for (int s = 0; s < 200; ++s) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto net = Filled(m, n, 1);
    const auto edges = EnumerateEdges(net);
    const auto edge = edges[rng() % edges.size()];
    std::vector<Node> members;
    for (std::size_t k = 0; k < net.node_count(); ++k) {
      if (rng() % 3 == 0) members.push_back(net.node_at(k));
    }
    if (members.empty()) members.push_back(net.node_at(rng() % net.node_count()));
    const Rational y = R(static_cast<std::int64_t>(rng() % 5), 4);
    const Rational theta = R(static_cast<std::int64_t>(rng() % 24), 4);
    const auto d = SetDistances(members, net,
                                oracle::BfsDistances(net, LocalFrame(net, edge)));
    const Rational flow =
        oracle::MaxAmount(net, edge, y, members, theta, false, opts);
    ASSERT_EQ(flow, ArrivalAmount(d.dp, d.dq, y, theta, params))
        << m << "x" << n << " " << edge.to_string() << " y " << y << " theta "
        << theta;
  }
}

TEST(MaxAmount, RefiningTheStepChangesNothing) {
  std::mt19937_64 rng(9);
  for (int s = 0; s < 50; ++s) {
    const auto net = Random(2 + static_cast<int>(rng() % 2),
                            2 + static_cast<int>(rng() % 2), rng);
    const auto edges = EnumerateEdges(net);
    const auto edge = edges[rng() % edges.size()];
    std::vector<Node> members;
    for (std::size_t k = 0; k < net.node_count(); ++k) {
      if (rng() % 2 == 0) members.push_back(net.node_at(k));
    }
    if (members.empty()) members.push_back(net.node_at(0));
    const Rational y = R(static_cast<std::int64_t>(rng() % 5), 4);
    const Rational theta = R(static_cast<std::int64_t>(rng() % 40), 4);
    const bool capped = rng() % 2 == 0;
    const Rational coarse = oracle::MaxAmount(net, edge, y, members, theta,
                                              capped, oracle::Options{4, true});
    const Rational fine = oracle::MaxAmount(net, edge, y, members, theta,
                                            capped, oracle::Options{8, true});
    EXPECT_LT(std::abs((coarse - fine).to_double()), 1e-9);
  }
}

TEST(ThetaStarOracle, Examples) {
  EXPECT_EQ(oracle::ThetaStarOracle(Filled(2, 2, 1), EdgeRef::Parse("0,0:0,1"),
                                    R(1, 2)),
            R(5, 2));
  EXPECT_EQ(oracle::ThetaStarOracle(Filled(3, 3, 1), EdgeRef::Parse("1,0:1,1"),
                                    R(1, 2)),
            R(5));
  EXPECT_EQ(oracle::ThetaStarOracle(Filled(3, 3, 0), EdgeRef::Parse("1,0:1,1"),
                                    R(1, 2)),
            R(0));
}

TEST(ThetaStarOracle, BracketsFeasibility) {
  std::mt19937_64 rng(13);
  for (int s = 0; s < 20; ++s) {
    const auto net = Random(2, 2 + static_cast<int>(rng() % 2), rng);
    if (net.total_supply().is_zero()) continue;
    const auto edges = EnumerateEdges(net);
    const auto edge = edges[rng() % edges.size()];
    const Rational y = R(1 + static_cast<std::int64_t>(rng() % 7), 8);
    const Rational theta = oracle::ThetaStarOracle(net, edge, y);
    std::vector<Node> all;
    for (std::size_t k = 0; k < net.node_count(); ++k) all.push_back(net.node_at(k));
    // A step fine enough that theta and theta - step/4 are both on the grid.
    const int steps = static_cast<int>(32 * theta.den());
    const oracle::Options fine{steps, true};
    const Rational before = theta - R(1, 32);
    EXPECT_EQ(oracle::MaxAmount(net, edge, y, all, theta, true, fine),
              net.total_supply());
    EXPECT_LT(oracle::MaxAmount(net, edge, y, all, before, true, fine),
              net.total_supply());
  }
}

TEST(ThetaStarOracle, NoWaitingAgreesOnUnitGrid) {
  oracle::Options no_wait;
  no_wait.allow_waiting = false;
  EXPECT_EQ(oracle::ThetaStarOracle(Filled(3, 3, 1), EdgeRef::Parse("1,0:1,1"),
                                    R(1, 2), no_wait),
            R(5));
}

TEST(SubsetMaxTheta, Examples) {
  EXPECT_EQ(oracle::SubsetMaxTheta(Filled(2, 2, 1), EdgeRef::Parse("0,0:0,1"),
                                   R(1, 2)),
            R(5, 2));
  EXPECT_EQ(oracle::SubsetMaxTheta(Filled(3, 3, 1), EdgeRef::Parse("1,0:1,1"),
                                   R(1, 2)),
            R(5));
  EXPECT_EQ(oracle::SubsetMaxTheta(Filled(3, 3, 0), EdgeRef::Parse("1,0:1,1"),
                                   R(1, 2)),
            R(0));
  EXPECT_THROW(oracle::SubsetMaxTheta(Filled(4, 5, 1), EdgeRef::Parse("0,0:0,1"),
                                      R(1, 2)),
               GuardError);
}

TEST(NodeTime, GoldenValues) {
  EXPECT_EQ(oracle::NodeTime(Filled(2, 2, 1), {0, 0}), R(5, 2));
  EXPECT_EQ(oracle::NodeTime(Filled(3, 3, 1), {1, 1}), R(3));
  EXPECT_EQ(oracle::NodeTime(Filled(3, 3, 0), {1, 1}), R(0));
}

TEST(NodeTime, DoublingStepsChangesNothing) {
  std::mt19937_64 rng(17);
  const auto net = Random(3, 3, rng);
  for (std::size_t k = 0; k < net.node_count(); ++k) {
    const Rational coarse = oracle::NodeTime(net, net.node_at(k), {8, true});
    const Rational fine = oracle::NodeTime(net, net.node_at(k), {16, true});
    EXPECT_LT(std::abs((coarse - fine).to_double()), 1e-9);
  }
}

TEST(NodeTime, GuardsLargeNetworks) {
  EXPECT_THROW(oracle::NodeTime(Filled(20, 21, 1), {0, 0}), GuardError);
}

}  // namespace
}  // namespace gridsink
