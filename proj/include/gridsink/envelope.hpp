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

#ifndef GRIDSINK_ENVELOPE_HPP_
#define GRIDSINK_ENVELOPE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gridsink/completion_time.hpp"
#include "gridsink/rational.hpp"

namespace gridsink {

// Affine function restricted to the closed interval [lo, hi].
struct Segment {
  Rational slope;
  Rational intercept;
  Rational lo;
  Rational hi;

  Rational operator()(const Rational& y) const { return slope * y + intercept; }
  bool covers(const Rational& y) const { return lo <= y && y <= hi; }
};

// One maximal run of the envelope on which a single segment is on top.
// lo == hi marks an isolated point where a segment pokes above its
// neighbours.
struct EnvelopePiece {
  Rational lo;
  Rational hi;
  std::size_t segment = 0;
};

struct BreakPoint {
  Rational y;
  Rational value;
  // Segment on top immediately to the right of y (to the left at the last
  // break point of a run).
  std::size_t segment = 0;
};

class UpperEnvelope {
 public:
  UpperEnvelope(std::vector<Segment> segments,
                std::vector<EnvelopePiece> pieces);

  std::span<const Segment> segments() const { return segments_; }
  std::span<const EnvelopePiece> pieces() const { return pieces_; }

  // Pointwise maximum over segments covering y; nullopt outside the union of
  // domains.
  std::optional<Rational> Value(const Rational& y) const;
  // Segment attaining Value(y), lowest index on ties.
  std::optional<std::size_t> ActiveSegment(const Rational& y) const;

  // Points where the envelope changes line, and the ends of each covered run,
  // in increasing order.
  std::vector<BreakPoint> BreakPoints() const;

 private:
  std::vector<Segment> segments_;
  std::vector<EnvelopePiece> pieces_;
};

// Divide-and-conquer envelope of arbitrary closed segments. Ties between
// coinciding segments go to the lower index. Throws on empty input or on a
// segment with lo > hi.
UpperEnvelope BuildUpperEnvelope(std::vector<Segment> segments);

struct Minimum {
  Rational y;
  Rational value;
};

// Lowest break point, smallest y on ties.
Minimum MinimizeEnvelope(const UpperEnvelope& env);

// Maximal affine pieces of each completion-time curve on [0, transit].
struct CurveSegments {
  std::vector<Segment> segments;
  std::vector<std::size_t> owner;  // index of the source curve
};
CurveSegments CurvesToSegments(std::span<const ThetaCurve> curves);

}  // namespace gridsink

#endif  // GRIDSINK_ENVELOPE_HPP_
