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

#ifndef GRIDSINK_ERRORS_HPP_
#define GRIDSINK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gridsink {

// Malformed or invariant-violating input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A desk-scale or enumeration guard refused the request.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gridsink

#endif  // GRIDSINK_ERRORS_HPP_
