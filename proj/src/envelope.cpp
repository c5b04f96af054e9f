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

#include <algorithm>
#include <stdexcept>

namespace gridsink {

namespace {

using Pieces = std::vector<EnvelopePiece>;

// Walks a sorted piece list and reports the interval piece whose interior
// contains (a, b), if any. Calls must come with non-decreasing a.
class IntervalCursor {
 public:
  explicit IntervalCursor(const Pieces& pieces) : pieces_(pieces) {}

  const EnvelopePiece* Find(const Rational& a, const Rational& b) {
    while (pos_ < pieces_.size() && pieces_[pos_].hi <= a) ++pos_;
    for (std::size_t k = pos_; k < pieces_.size() && pieces_[k].lo <= a; ++k) {
      const auto& pc = pieces_[k];
      if (pc.lo < pc.hi && pc.lo <= a && b <= pc.hi) return &pc;
    }
    return nullptr;
  }

 private:
  const Pieces& pieces_;
  std::size_t pos_ = 0;
};

struct PointBest {
  bool found = false;
  Rational value;
  std::size_t segment = 0;

  void Offer(const Rational& v, std::size_t seg) {
    if (!found || value < v || (v == value && seg < segment)) {
      found = true;
      value = v;
      segment = seg;
    }
  }
};

void OfferPoint(const Pieces& pieces, const std::vector<Segment>& segs,
                const Rational& x, PointBest& best) {
  auto it = std::lower_bound(
      pieces.begin(), pieces.end(), x,
      [](const EnvelopePiece& pc, const Rational& v) { return pc.hi < v; });
  for (; it != pieces.end() && it->lo <= x; ++it) {
    best.Offer(segs[it->segment](x), it->segment);
  }
}

void Append(Pieces& out, const Rational& lo, const Rational& hi,
            std::size_t seg) {
  if (!out.empty() && out.back().segment == seg && out.back().hi == lo &&
      out.back().lo < out.back().hi) {
    out.back().hi = hi;
    return;
  }
  out.push_back({lo, hi, seg});
}

Pieces Merge(const Pieces& left, const Pieces& right,
             const std::vector<Segment>& segs) {
  std::vector<Rational> xs;
  xs.reserve(2 * (left.size() + right.size()));
  for (const auto* side : {&left, &right}) {
    for (const auto& pc : *side) {
      xs.push_back(pc.lo);
      xs.push_back(pc.hi);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Interval pieces per elementary interval; crossings split it in two.
  Pieces intervals;
  IntervalCursor lc(left), rc(right);
  for (std::size_t t = 0; t + 1 < xs.size(); ++t) {
    const Rational& a = xs[t];
    const Rational& b = xs[t + 1];
    const EnvelopePiece* pl = lc.Find(a, b);
    const EnvelopePiece* pr = rc.Find(a, b);
    if (pl == nullptr && pr == nullptr) continue;
    if (pl == nullptr || pr == nullptr) {
      intervals.push_back({a, b, (pl ? pl : pr)->segment});
      continue;
    }
    const Segment& fl = segs[pl->segment];
    const Segment& fr = segs[pr->segment];
    const Rational da = fl(a) - fr(a);
    const Rational db = fl(b) - fr(b);
    const std::size_t lower = std::min(pl->segment, pr->segment);
    if (da.sign() == 0 && db.sign() == 0) {
      intervals.push_back({a, b, lower});
    } else if (da.sign() >= 0 && db.sign() >= 0) {
      intervals.push_back({a, b, pl->segment});
    } else if (da.sign() <= 0 && db.sign() <= 0) {
      intervals.push_back({a, b, pr->segment});
    } else {
      // Strict sign change: the lines cross inside (a, b).
      const Rational x = (fr.intercept - fl.intercept) / (fl.slope - fr.slope);
      const std::size_t first = da.sign() > 0 ? pl->segment : pr->segment;
      const std::size_t second = da.sign() > 0 ? pr->segment : pl->segment;
      intervals.push_back({a, x, first});
      intervals.push_back({x, b, second});
    }
  }

  // Isolated points where something sticks out above the interval pieces
  // (segment endpoints, degenerate segments).
  Pieces out;
  out.reserve(intervals.size() + 4);
  std::size_t k = 0;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const Rational& x = xs[t];
    PointBest best;
    OfferPoint(left, segs, x, best);
    OfferPoint(right, segs, x, best);
    bool covered = false;
    Rational adjacent;
    auto consider = [&](const EnvelopePiece& pc) {
      const Rational v = segs[pc.segment](x);
      if (!covered || adjacent < v) adjacent = v;
      covered = true;
    };
    if (k > 0 && intervals[k - 1].hi == x) consider(intervals[k - 1]);
    if (k < intervals.size() && intervals[k].lo == x) consider(intervals[k]);
    if (best.found && (!covered || adjacent < best.value)) {
      out.push_back({x, x, best.segment});
    }
    while (k < intervals.size() &&
           (t + 1 == xs.size() || intervals[k].lo < xs[t + 1])) {
      Append(out, intervals[k].lo, intervals[k].hi, intervals[k].segment);
      ++k;
    }
  }
  return out;
}

Pieces Build(const std::vector<Segment>& segs, std::size_t begin,
             std::size_t end) {
  if (end - begin == 1) return {{segs[begin].lo, segs[begin].hi, begin}};
  const std::size_t mid = begin + (end - begin) / 2;
  return Merge(Build(segs, begin, mid), Build(segs, mid, end), segs);
}

}  // namespace

UpperEnvelope::UpperEnvelope(std::vector<Segment> segments,
                             std::vector<EnvelopePiece> pieces)
    : segments_(std::move(segments)), pieces_(std::move(pieces)) {}

std::optional<Rational> UpperEnvelope::Value(const Rational& y) const {
  PointBest best;
  OfferPoint(pieces_, segments_, y, best);
  if (!best.found) return std::nullopt;
  return best.value;
}

std::optional<std::size_t> UpperEnvelope::ActiveSegment(
    const Rational& y) const {
  PointBest best;
  OfferPoint(pieces_, segments_, y, best);
  if (!best.found) return std::nullopt;
  // A lower-index segment may tie with the stored piece at y.
  for (std::size_t s = 0; s < best.segment; ++s) {
    if (segments_[s].covers(y) && segments_[s](y) == best.value) return s;
  }
  return best.segment;
}

std::vector<BreakPoint> UpperEnvelope::BreakPoints() const {
  // A piece boundary where the envelope continues on the same line is not a
  // break; equal segments from different curves would otherwise leave one.
  auto joined = [&](std::size_t k) {
    if (k + 1 >= pieces_.size()) return false;
    const auto& a = pieces_[k];
    const auto& b = pieces_[k + 1];
    const Segment& sa = segments_[a.segment];
    const Segment& sb = segments_[b.segment];
    return a.hi == b.lo && sa.slope == sb.slope && sa.intercept == sb.intercept;
  };
  std::vector<BreakPoint> out;
  auto emit = [&](const Rational& y, std::size_t seg) {
    if (!out.empty() && out.back().y == y) return;
    out.push_back({y, *Value(y), seg});
  };
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const auto& pc = pieces_[k];
    if (k == 0 || !joined(k - 1)) emit(pc.lo, pc.segment);
    if (joined(k)) continue;
    // Prefer the piece that starts here; fall back to the one ending here.
    std::size_t seg = pc.segment;
    if (k + 1 < pieces_.size() && pieces_[k + 1].lo == pc.hi) {
      seg = pieces_[k + 1].segment;
    }
    emit(pc.hi, seg);
  }
  return out;
}

UpperEnvelope BuildUpperEnvelope(std::vector<Segment> segments) {
  if (segments.empty()) {
    throw std::invalid_argument("upper envelope of an empty segment set");
  }
  for (const auto& s : segments) {
    if (s.hi < s.lo) throw std::invalid_argument("segment with lo > hi");
  }
  Pieces pieces = Build(segments, 0, segments.size());
  return UpperEnvelope(std::move(segments), std::move(pieces));
}

Minimum MinimizeEnvelope(const UpperEnvelope& env) {
  const auto breaks = env.BreakPoints();
  if (breaks.empty()) throw std::invalid_argument("empty envelope");
  Minimum best{breaks.front().y, breaks.front().value};
  for (const auto& bp : breaks) {
    if (bp.value < best.value) best = {bp.y, bp.value};
  }
  return best;
}

CurveSegments CurvesToSegments(std::span<const ThetaCurve> curves) {
  CurveSegments out;
  for (std::size_t idx = 0; idx < curves.size(); ++idx) {
    const ThetaCurve& curve = curves[idx];
    const Rational tau = curve.params().transit;
    if (curve.degenerate()) {
      out.segments.push_back({0, 0, 0, tau});
      out.owner.push_back(idx);
      continue;
    }
    const auto& forms = curve.forms();
    std::vector<Rational> xs = {Rational(0), tau};
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        if (forms[a].slope == forms[b].slope) continue;
        const Rational x = (forms[b].intercept - forms[a].intercept) /
                           (forms[a].slope - forms[b].slope);
        if (x.sign() > 0 && x < tau) xs.push_back(x);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const std::size_t first = out.segments.size();
    for (std::size_t t = 0; t + 1 < xs.size(); ++t) {
      const Rational mid = (xs[t] + xs[t + 1]) / Rational(2);
      std::size_t arg = 0;
      for (std::size_t f = 1; f < 3; ++f) {
        if (forms[f](mid) < forms[arg](mid)) arg = f;
      }
      const AffineForm& form = forms[arg];
      if (out.segments.size() > first &&
          out.segments.back().slope == form.slope &&
          out.segments.back().intercept == form.intercept) {
        out.segments.back().hi = xs[t + 1];
        continue;
      }
      out.segments.push_back({form.slope, form.intercept, xs[t], xs[t + 1]});
      out.owner.push_back(idx);
    }
  }
  return out;
}

}  // namespace gridsink
