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

#include "metrivec/point.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "metrivec/errors.hpp"

namespace metrivec {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Rational> Rational::make(__int128 n, __int128 d) {
  if (d == 0) return std::nullopt;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > kMax || n < -kMax || d > kMax) return std::nullopt;
  return Rational{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> add(const Rational& x, const Rational& y) {
  return Rational::make(static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den,
                        static_cast<__int128>(x.den) * y.den);
}

std::optional<Rational> sub(const Rational& x, const Rational& y) {
  return Rational::make(static_cast<__int128>(x.num) * y.den - static_cast<__int128>(y.num) * x.den,
                        static_cast<__int128>(x.den) * y.den);
}

Point Point::rational(std::int64_t num, std::int64_t den) {
  auto q = Rational::make(num, den);
  if (!q) throw DomainError("rational point with zero denominator");
  return exact(*q);
}

Point Point::parse(std::string_view text) {
  if (text.empty()) throw UsageError("empty point");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto lhs = text.substr(0, slash);
    auto rhs = text.substr(slash + 1);
    auto n = parse_int(lhs);
    auto d = parse_int(rhs);
    if (n && d) {
      if (*d == 0) throw UsageError("point '" + std::string(text) + "' has zero denominator");
      return rational(*n, *d);
    }
    // sqrt(x)/k style generic irrational
    auto num = parse(lhs);
    auto den = parse_double(rhs);
    if (!den || *den == 0.0) throw UsageError("cannot parse point '" + std::string(text) + "'");
    return generic(num.value() / *den);
  }
  if (text.starts_with("sqrt(") && text.ends_with(")")) {
    auto inner = parse_double(text.substr(5, text.size() - 6));
    if (!inner || *inner < 0.0) throw UsageError("cannot parse point '" + std::string(text) + "'");
    return generic(std::sqrt(*inner));
  }
  if (auto n = parse_int(text)) return rational(*n, 1);
  if (auto x = parse_double(text)) return generic(*x);
  throw UsageError("cannot parse point '" + std::string(text) + "'");
}

std::string Point::to_string() const {
  if (exact_) return exact_->den == 1 ? std::to_string(exact_->num) : exact_->to_string();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, ptr);
}

Point midpoint(const Point& x, const Point& y) {
  if (x.exact_ && y.exact_) {
    auto q = Rational::make(static_cast<__int128>(x.exact_->num) * y.exact_->den +
                                static_cast<__int128>(y.exact_->num) * x.exact_->den,
                            static_cast<__int128>(2) * x.exact_->den * y.exact_->den);
    if (q) return Point::exact(*q);
  }
  return Point::generic(x.value_ + 0.5 * (y.value_ - x.value_));
}

Point lerp(const Point& x, const Point& y, std::int64_t i, std::int64_t n) {
  if (i == 0) return x;
  if (i == n) return y;
  if (x.exact_ && y.exact_) {
    // x + i(y - x)/n = (x(n - i) + y i)/n
    __int128 xn = x.exact_->num, xd = x.exact_->den, yn = y.exact_->num, yd = y.exact_->den;
    auto q = Rational::make(xn * yd * (n - i) + yn * xd * i, xd * yd * n);
    if (q) return Point::exact(*q);
  }
  return Point::generic(x.value_ + (y.value_ - x.value_) * static_cast<double>(i) / static_cast<double>(n));
}

Point shift_dyadic(const Point& x, int sign, int k) {
  if (x.exact_ && k < 62) {
    auto step = Rational::make(sign, static_cast<__int128>(1) << k);
    if (step) {
      if (auto q = add(*x.exact_, *step)) return Point::exact(*q);
    }
  }
  return Point::generic(x.value_ + sign * std::ldexp(1.0, -k));
}

double width(const Point& x, const Point& y) {
  if (x.exact_value() && y.exact_value()) {
    if (auto q = sub(*y.exact_value(), *x.exact_value())) return q->value();
  }
  return y.value() - x.value();
}

}  // namespace metrivec
