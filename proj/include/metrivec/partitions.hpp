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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "metrivec/point.hpp"

namespace metrivec {

/// Strictly increasing points a = t_0 < ... < t_N = b with N >= 1.
class Partition {
 public:
  /// Throws DomainError unless the points are strictly increasing and at
  /// least two.
  explicit Partition(std::vector<Point> points);
  static Partition from_values(std::span<const double> values);

  std::span<const Point> points() const { return points_; }
  std::vector<double> values() const;
  std::size_t intervals() const { return points_.size() - 1; }
  const Point& left(std::size_t i) const { return points_[i]; }
  const Point& right(std::size_t i) const { return points_[i + 1]; }
  /// t_{i+1} - t_i, exact for rational endpoints.
  double width(std::size_t i) const { return metrivec::width(points_[i], points_[i + 1]); }
  double a() const { return points_.front().value(); }
  double b() const { return points_.back().value(); }

 private:
  std::vector<Point> points_;
};

/// Partition plus tags s_i in [t_{i-1}, t_i]; containment is checked on
/// construction.
class TaggedPartition {
 public:
  TaggedPartition(Partition partition, std::vector<Point> tags);

  const Partition& partition() const { return partition_; }
  std::span<const Point> tags() const { return tags_; }
  std::span<const Point> points() const { return partition_.points(); }
  std::size_t intervals() const { return partition_.intervals(); }

 private:
  Partition partition_;
  std::vector<Point> tags_;
};

enum class TagRule { left, right, midpoint, seeded_random };

/// t_i = a + i(b - a)/N. Points are exact rationals when a and b are
/// integers, generic otherwise.
Partition uniform_points(double a, double b, std::size_t n);

/// Tags for every interval of `p` following `rule`. Seeded-random tags are
/// generic points.
TaggedPartition with_tags(const Partition& p, TagRule rule, std::uint64_t seed = 0);

TaggedPartition uniform(double a, double b, std::size_t n, TagRule rule, std::uint64_t seed = 0);

/// max_i (t_i - t_{i-1}).
double mesh(const Partition& p);
inline double mesh(const TaggedPartition& p) { return mesh(p.partition()); }

/// True iff every point of `coarse` is a point of `fine` (exact double
/// equality). Throws DomainError on endpoint mismatch.
bool refines(const Partition& fine, const Partition& coarse);

/// Union of the points of `tagged` and `extra`. Intervals that coincide
/// with an interval of `tagged` keep its tag; the others are tagged at
/// their midpoint, or at a seeded random point when `seed` is given.
TaggedPartition merge(const TaggedPartition& tagged, const Partition& extra,
                      std::optional<std::uint64_t> seed = std::nullopt);

/// New tags from `rule(left, right, index)`; throws InvariantError when a
/// returned tag leaves its interval.
using TagSource = std::function<Point(const Point& left, const Point& right, std::size_t index)>;
TaggedPartition retag(const TaggedPartition& tagged, const TagSource& rule);

}  // namespace metrivec
