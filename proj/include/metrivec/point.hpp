// Copyright 2026 The metrivec Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace metrivec {

/// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Normalizes n/d; empty when d == 0 or the reduced terms overflow int64.
  static std::optional<Rational> make(__int128 n, __int128 d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

std::optional<Rational> add(const Rational& x, const Rational& y);
std::optional<Rational> sub(const Rational& x, const Rational& y);

/// A point of the real line.
///
/// Points that carry an exact rational are "known rational". Every other
/// point is generic: functions that care about rationality treat it as
/// irrational. Rationality of a double is meaningless, so it is never
/// inferred from the value.
class Point {
 public:
  Point() = default;

  static Point generic(double x) { return Point(x, std::nullopt); }
  static Point rational(std::int64_t num, std::int64_t den);
  static Point exact(const Rational& q) { return Point(q.value(), q); }

  /// "p/q" and plain integers parse as exact rationals, anything else as a
  /// generic point. Accepts "sqrt(x)" and "sqrt(x)/k" for generic irrationals.
  static Point parse(std::string_view text);

  double value() const { return value_; }
  const std::optional<Rational>& exact_value() const { return exact_; }
  bool is_rational() const { return exact_.has_value(); }

  /// Exact text when rational, shortest round-trip decimal otherwise.
  std::string to_string() const;

  friend Point midpoint(const Point& x, const Point& y);
  /// x + (i/n)(y - x), exact when both ends are.
  friend Point lerp(const Point& x, const Point& y, std::int64_t i, std::int64_t n);
  /// x + sign * 2^-k, exact when x is.
  friend Point shift_dyadic(const Point& x, int sign, int k);

 private:
  Point(double v, std::optional<Rational> q) : value_(v), exact_(q) {}

  double value_ = 0.0;
  std::optional<Rational> exact_;
};

/// Width y - x; computed exactly when both points are rational.
double width(const Point& x, const Point& y);

}  // namespace metrivec
