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

#ifndef GRIDSINK_COMPLETION_TIME_HPP_
#define GRIDSINK_COMPLETION_TIME_HPP_

#include <array>
#include <utility>

#include "gridsink/rational.hpp"

namespace gridsink {

// Uniform edge parameters of the grid.
struct FlowParams {
  Rational capacity;  // flow units per time unit
  Rational transit;   // time units per edge
};

// y -> a*y + b.
struct AffineForm {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& y) const { return slope * y + intercept; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// Shorter and longer route length from a set with hop distances (dp, dq) to
// a sink sitting y time units from p on the split edge.
std::pair<Rational, Rational> RouteLengths(int dp, int dq, const Rational& y,
                                           const FlowParams& params);

// Maximum amount a set can deliver to the sink by time theta.
Rational ArrivalAmount(int dp, int dq, const Rational& y, const Rational& theta,
                       const FlowParams& params);

// Completion time of a set as a function of the sink offset y on [0, transit]:
// min of three affine forms, or identically zero when the set carries no
// supply.
class ThetaCurve {
 public:
  ThetaCurve(Rational weight, int dp, int dq, FlowParams params);

  const Rational& weight() const { return weight_; }
  int dp() const { return dp_; }
  int dq() const { return dq_; }
  const FlowParams& params() const { return params_; }
  bool degenerate() const { return weight_.is_zero(); }

  // Through p, through q, and the two-route form, in that order.
  const std::array<AffineForm, 3>& forms() const { return forms_; }

  Rational operator()(const Rational& y) const;

 private:
  Rational weight_;
  int dp_;
  int dq_;
  FlowParams params_;
  std::array<AffineForm, 3> forms_;
};

inline ThetaCurve MakeThetaCurve(const Rational& weight, int dp, int dq,
                                 const FlowParams& params) {
  return ThetaCurve(weight, dp, dq, params);
}

}  // namespace gridsink

#endif  // GRIDSINK_COMPLETION_TIME_HPP_
