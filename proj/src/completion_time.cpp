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

#include "gridsink/completion_time.hpp"

#include <stdexcept>

namespace gridsink {

namespace {

void CheckOffset(const Rational& y, const FlowParams& params) {
  if (y.sign() < 0 || params.transit < y) {
    throw std::out_of_range("sink offset " + y.to_string() +
                            " outside [0, " + params.transit.to_string() +
                            "]");
  }
}

}  // namespace

std::pair<Rational, Rational> RouteLengths(int dp, int dq, const Rational& y,
                                           const FlowParams& params) {
  CheckOffset(y, params);
  if (dp < 0 || dq < 0) throw std::invalid_argument("negative distance");
  const Rational& tau = params.transit;
  const Rational via_p = Rational(dp) * tau + y;
  const Rational via_q = Rational(dq) * tau + tau - y;
  return via_p <= via_q ? std::pair{via_p, via_q} : std::pair{via_q, via_p};
}

Rational ArrivalAmount(int dp, int dq, const Rational& y, const Rational& theta,
                       const FlowParams& params) {
  CheckOffset(y, params);
  const Rational& c = params.capacity;
  const Rational& tau = params.transit;
  Rational best = 0;
  best = Max(best, c * (theta - Rational(dp) * tau - y));
  best = Max(best, c * (theta - Rational(dq) * tau - tau + y));
  best = Max(best, c * (Rational(2) * theta - Rational(dp + dq + 1) * tau));
  return best;
}

ThetaCurve::ThetaCurve(Rational weight, int dp, int dq, FlowParams params)
    : weight_(weight), dp_(dp), dq_(dq), params_(params) {
  if (weight_.sign() < 0) throw std::invalid_argument("negative set weight");
  if (dp < 0 || dq < 0) throw std::invalid_argument("negative distance");
  const Rational& tau = params_.transit;
  const Rational drain = weight_ / params_.capacity;
  forms_[0] = {Rational(1), drain + Rational(dp) * tau};
  forms_[1] = {Rational(-1), tau + drain + Rational(dq) * tau};
  forms_[2] = {Rational(0),
               drain / Rational(2) + Rational(dp + dq + 1) * tau / Rational(2)};
}

Rational ThetaCurve::operator()(const Rational& y) const {
  CheckOffset(y, params_);
  if (degenerate()) return 0;
  return Min(Min(forms_[0](y), forms_[1](y)), forms_[2](y));
}

}  // namespace gridsink
