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

#ifndef GRIDSINK_RATIONAL_HPP_
#define GRIDSINK_RATIONAL_HPP_

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gridsink {

// Exact rational number with 64-bit numerator and denominator. Intermediate
// products use 128-bit arithmetic; a result that does not fit back into 64
// bits throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) { Assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "n" or "n/d" with optional leading sign on n.
  static Rational Parse(std::string_view text);

  Rational operator-() const {
    if (num_ == INT64_MIN) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t out;
      if (__builtin_add_overflow(a.num_, b.num_, &out)) {
        throw std::overflow_error("rational overflow");
      }
      return Rational(out);
    }
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return FromWide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.num_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return FromWide(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return FromWide(n, d);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void Assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    FromWideInto(num, den, *this);
  }

  static Rational FromWide(__int128 n, __int128 d) {
    Rational r;
    FromWideInto(n, d, r);
    return r;
  }

  static __int128 Gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static void FromWideInto(__int128 n, __int128 d, Rational& out) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      out.num_ = 0;
      out.den_ = 1;
      return;
    }
    if (d != 1) {
      const __int128 g = Gcd(n, d);
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) {
      throw std::overflow_error("rational overflow");
    }
    out.num_ = static_cast<std::int64_t>(n);
    out.den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::Parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t pos = 0;
    const std::string owned(s);
    long long v = 0;
    try {
      v = std::stoll(owned, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational '" + owned + "'");
    }
    if (pos != owned.size()) {
      throw std::invalid_argument("malformed rational '" + owned + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) {
    throw std::invalid_argument("rational denominator must be positive");
  }
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline Rational Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline Rational Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
inline Rational Abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace gridsink

#endif  // GRIDSINK_RATIONAL_HPP_
