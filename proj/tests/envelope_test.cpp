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

#include "gridsink/envelope.hpp"

#include <gtest/gtest.h>

#include <random>

namespace gridsink {
namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Segment Line(Rational slope, Rational intercept) {
  return {slope, intercept, 0, 1};
}

std::vector<std::pair<Rational, Rational>> Breaks(const UpperEnvelope& env) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& bp : env.BreakPoints()) out.emplace_back(bp.y, bp.value);
  return out;
}

using Pairs = std::vector<std::pair<Rational, Rational>>;

TEST(UpperEnvelope, Crossing) {
  const auto env = BuildUpperEnvelope({Line(1, 0), Line(-1, 1)});
  EXPECT_EQ(Breaks(env), (Pairs{{0, 1}, {R(1, 2), R(1, 2)}, {1, 1}}));
  const Minimum m = MinimizeEnvelope(env);
  EXPECT_EQ(m.y, R(1, 2));
  EXPECT_EQ(m.value, R(1, 2));
}

TEST(UpperEnvelope, SingleSegment) {
  const auto env = BuildUpperEnvelope({Line(2, 1)});
  EXPECT_EQ(Breaks(env), (Pairs{{0, 1}, {1, 3}}));
}

TEST(UpperEnvelope, ThreeLines) {
  const auto env =
      BuildUpperEnvelope({Line(-1, 4), Line(0, R(7, 2)), Line(1, 2)});
  EXPECT_EQ(Breaks(env), (Pairs{{0, 4}, {R(1, 2), R(7, 2)}, {1, R(7, 2)}}));
  EXPECT_EQ(*env.ActiveSegment(R(1, 4)), 0u);
  EXPECT_EQ(*env.ActiveSegment(R(3, 4)), 1u);
  // At y = 1/2 the first two tie; the lower index wins.
  EXPECT_EQ(*env.ActiveSegment(R(1, 2)), 0u);
  const Minimum m = MinimizeEnvelope(env);
  EXPECT_EQ(m.y, R(1, 2));
  EXPECT_EQ(m.value, R(7, 2));
  for (int k = 0; k <= 64; ++k) {
    const Rational y = R(k, 64);
    EXPECT_EQ(*env.Value(y), Max(Max(4 - y, R(7, 2)), y + 2));
  }
}

TEST(UpperEnvelope, FlatTakesSmallestY) {
  const Minimum m = MinimizeEnvelope(BuildUpperEnvelope({Line(0, 5)}));
  EXPECT_EQ(m.y, R(0));
  EXPECT_EQ(m.value, R(5));
}

TEST(UpperEnvelope, IdenticalSegmentsPreferLowerIndex) {
  const auto env = BuildUpperEnvelope({Line(0, 1), Line(1, -5), Line(0, 1)});
  EXPECT_EQ(*env.ActiveSegment(R(1, 2)), 0u);
}

TEST(UpperEnvelope, PartialDomainsLeaveGaps) {
  const auto env = BuildUpperEnvelope(
      {Segment{0, 1, 0, R(1, 4)}, Segment{0, 2, R(3, 4), 1},
       Segment{1, 0, R(1, 2), R(1, 2)}});
  EXPECT_EQ(env.Value(R(1, 8)), R(1));
  EXPECT_FALSE(env.Value(R(3, 8)).has_value());
  EXPECT_EQ(env.Value(R(1, 2)), R(1, 2));
  EXPECT_FALSE(env.Value(R(5, 8)).has_value());
  EXPECT_EQ(env.Value(R(7, 8)), R(2));
}

TEST(UpperEnvelope, CollinearPiecesShareOneRun) {
  // Both halves of 3 - y; the tie at y = 1/2 switches segments but the
  // envelope stays on one line.
  const auto env = BuildUpperEnvelope(
      {Segment{-1, 3, R(1, 2), 1}, Segment{-1, 3, 0, R(1, 2)}});
  EXPECT_EQ(Breaks(env), (Pairs{{0, 3}, {1, 2}}));
  EXPECT_EQ(*env.ActiveSegment(R(3, 4)), 0u);
  EXPECT_EQ(*env.ActiveSegment(R(1, 4)), 1u);
}

TEST(UpperEnvelope, RejectsEmptyInput) {
  EXPECT_THROW(BuildUpperEnvelope({}), std::invalid_argument);
}

TEST(UpperEnvelope, MatchesPointwiseMaximum) {
  std::mt19937_64 rng(11);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int s = 0; s < 300; ++s) {
    std::vector<Segment> segs;
    const int count = pick(1, 64);
    for (int k = 0; k < count; ++k) {
      int a = pick(0, 16), b = pick(0, 16);
      if (a > b) std::swap(a, b);
      segs.push_back({R(pick(-9, 9), pick(1, 4)), R(pick(-20, 20), pick(1, 4)),
                      R(a, 16), R(b, 16)});
    }
    const auto env = BuildUpperEnvelope(segs);
    const auto breaks = env.BreakPoints();
    EXPECT_LE(breaks.size(), 12 * segs.size());
    for (std::size_t k = 1; k < breaks.size(); ++k) {
      EXPECT_LT(breaks[k - 1].y, breaks[k].y);
    }
    for (int t = 0; t <= 128; ++t) {
      const Rational y = R(t, 128);
      std::optional<Rational> naive;
      for (const auto& seg : segs) {
        if (seg.covers(y) && (!naive || *naive < seg(y))) naive = seg(y);
      }
      ASSERT_EQ(env.Value(y), naive) << "set " << s << " y " << y;
    }
  }
}

TEST(CurvesToSegments, TracksOwners) {
  const FlowParams params{1, 1};
  const std::vector<ThetaCurve> curves = {ThetaCurve(2, 1, 2, params),
                                          ThetaCurve(R(1, 4), 2, 2, params),
                                          ThetaCurve(0, 0, 3, params)};
  const auto out = CurvesToSegments(curves);
  ASSERT_EQ(out.segments.size(), out.owner.size());
  EXPECT_LE(out.segments.size(), 3 * curves.size());
  for (std::size_t k = 0; k < out.segments.size(); ++k) {
    const auto& seg = out.segments[k];
    const auto& curve = curves[out.owner[k]];
    EXPECT_EQ(seg(seg.lo), curve(seg.lo));
    EXPECT_EQ(seg(seg.hi), curve(seg.hi));
  }
}

}  // namespace
}  // namespace gridsink
