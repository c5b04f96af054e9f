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

#ifndef GRIDSINK_REPORT_HPP_
#define GRIDSINK_REPORT_HPP_

#include <string>

#include "gridsink/network.hpp"
#include "gridsink/rational.hpp"
#include "gridsink/solver.hpp"
#include "json.hpp"

// JSON and CSV documents written by the command-line tool.
namespace gridsink::report {

// Integer, or [num, den] when fractional; the same shape the network
// document accepts.
nlohmann::json ToJson(const Rational& r);
Rational RationalFromJson(const nlohmann::json& j);

nlohmann::json ToJson(Node v);
nlohmann::json ToJson(const EdgeRef& e);
nlohmann::json ToJson(const SolveResult& r);
nlohmann::json ToJson(const GridSolution& g);

// Break points as {"edge", "break_points": [{y, value, active_segment,
// binding}], "minimum": {y, value}}.
nlohmann::json EnvelopeJson(const EdgeSolution& s);
// Header "y,value,active_segment" then one row per break point; rationals
// written as n or n/d.
std::string EnvelopeCsv(const EdgeSolution& s);

}  // namespace gridsink::report

#endif  // GRIDSINK_REPORT_HPP_
