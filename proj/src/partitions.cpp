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

#include "metrivec/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "metrivec/errors.hpp"
#include "metrivec/random.hpp"

namespace metrivec {

namespace {

bool is_small_integer(double x) {
  return std::isfinite(x) && std::floor(x) == x && std::abs(x) < 0x1.0p31;
}

std::string fmt(double x) { return Point::generic(x).to_string(); }

}  // namespace

Partition::Partition(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("a partition needs at least two points");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].value() < points_[i].value())) {
      throw DomainError("partition points must be strictly increasing (t_" + std::to_string(i - 1) + " = " +
                        fmt(points_[i - 1].value()) + ", t_" + std::to_string(i) + " = " +
                        fmt(points_[i].value()) + ")");
    }
  }
}

Partition Partition::from_values(std::span<const double> values) {
  std::vector<Point> pts;
  pts.reserve(values.size());
  for (double v : values) pts.push_back(Point::generic(v));
  return Partition(std::move(pts));
}

std::vector<double> Partition::values() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.value());
  return out;
}

TaggedPartition::TaggedPartition(Partition partition, std::vector<Point> tags)
    : partition_(std::move(partition)), tags_(std::move(tags)) {
  if (tags_.size() != partition_.intervals()) {
    throw InvariantError("expected " + std::to_string(partition_.intervals()) + " tags, got " +
                         std::to_string(tags_.size()));
  }
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    double s = tags_[i].value();
    if (!(partition_.left(i).value() <= s && s <= partition_.right(i).value())) {
      throw InvariantError("tag " + fmt(s) + " lies outside interval " + std::to_string(i + 1) + " [" +
                           fmt(partition_.left(i).value()) + ", " + fmt(partition_.right(i).value()) + "]");
    }
  }
}

Partition uniform_points(double a, double b, std::size_t n) {
  if (!(a < b)) throw DomainError("uniform partition needs a < b, got a = " + fmt(a) + ", b = " + fmt(b));
  if (n == 0) throw DomainError("uniform partition needs N >= 1");
  Point pa = is_small_integer(a) ? Point::rational(static_cast<std::int64_t>(a), 1) : Point::generic(a);
  Point pb = is_small_integer(b) ? Point::rational(static_cast<std::int64_t>(b), 1) : Point::generic(b);
  std::vector<Point> pts;
  pts.reserve(n + 1);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t i = 0; i <= nn; ++i) pts.push_back(lerp(pa, pb, i, nn));
  return Partition(std::move(pts));
}

TaggedPartition with_tags(const Partition& p, TagRule rule, std::uint64_t seed) {
  std::vector<Point> tags;
  tags.reserve(p.intervals());
  Rng rng(seed);
  for (std::size_t i = 0; i < p.intervals(); ++i) {
    switch (rule) {
      case TagRule::left: tags.push_back(p.left(i)); break;
      case TagRule::right: tags.push_back(p.right(i)); break;
      case TagRule::midpoint: tags.push_back(midpoint(p.left(i), p.right(i))); break;
      case TagRule::seeded_random: {
        double l = p.left(i).value();
        double r = p.right(i).value();
        tags.push_back(Point::generic(std::clamp(l + (r - l) * rng.uniform(), l, r)));
        break;
      }
    }
  }
  return TaggedPartition(p, std::move(tags));
}

TaggedPartition uniform(double a, double b, std::size_t n, TagRule rule, std::uint64_t seed) {
  return with_tags(uniform_points(a, b, n), rule, seed);
}

double mesh(const Partition& p) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.intervals(); ++i) m = std::max(m, p.width(i));
  return m;
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.a() != coarse.a() || fine.b() != coarse.b()) {
    throw DomainError("partitions cover different intervals");
  }
  auto fp = fine.points();
  std::size_t j = 0;
  for (const auto& c : coarse.points()) {
    while (j < fp.size() && fp[j].value() < c.value()) ++j;
    if (j == fp.size() || fp[j].value() != c.value()) return false;
  }
  return true;
}

TaggedPartition merge(const TaggedPartition& tagged, const Partition& extra, std::optional<std::uint64_t> seed) {
  const Partition& base = tagged.partition();
  if (base.a() != extra.a() || base.b() != extra.b()) {
    throw DomainError("partitions cover different intervals");
  }
  auto bp = base.points();
  auto ep = extra.points();
  std::vector<Point> pts;
  // index into base for each merged point, or npos when it only comes from `extra`
  std::vector<std::size_t> from_base;
  constexpr auto npos = std::numeric_limits<std::size_t>::max();
  std::size_t i = 0, j = 0;
  while (i < bp.size() || j < ep.size()) {
    if (j == ep.size() || (i < bp.size() && bp[i].value() < ep[j].value())) {
      pts.push_back(bp[i]);
      from_base.push_back(i++);
    } else if (i == bp.size() || ep[j].value() < bp[i].value()) {
      pts.push_back(ep[j++]);
      from_base.push_back(npos);
    } else {
      pts.push_back(bp[i]);
      from_base.push_back(i++);
      ++j;
    }
  }
  Rng rng(seed.value_or(0));
  std::vector<Point> tags;
  tags.reserve(pts.size() - 1);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    std::size_t l = from_base[k], r = from_base[k + 1];
    if (l != npos && r != npos && r == l + 1) {
      tags.push_back(tagged.tags()[l]);
    } else if (seed) {
      double lo = pts[k].value(), hi = pts[k + 1].value();
      tags.push_back(Point::generic(std::clamp(lo + (hi - lo) * rng.uniform(), lo, hi)));
    } else {
      tags.push_back(midpoint(pts[k], pts[k + 1]));
    }
  }
  return TaggedPartition(Partition(std::move(pts)), std::move(tags));
}

TaggedPartition retag(const TaggedPartition& tagged, const TagSource& rule) {
  const Partition& p = tagged.partition();
  std::vector<Point> tags;
  tags.reserve(p.intervals());
  for (std::size_t i = 0; i < p.intervals(); ++i) tags.push_back(rule(p.left(i), p.right(i), i));
  return TaggedPartition(p, std::move(tags));
}

}  // namespace metrivec
