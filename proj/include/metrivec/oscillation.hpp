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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metrivec/integrand.hpp"
#include "metrivec/integration.hpp"
#include "metrivec/partitions.hpp"

namespace metrivec {

struct OscillationSampler {
  /// Random generic points drawn per window, on top of the structural ones.
  std::size_t samples = 8;
  std::uint64_t seed = 0;
  /// Add the integrand's witness at the window center when it has one.
  bool witness_assisted = true;
};

/// Sup-type oscillation estimate. Every estimate is a lower bound for the
/// true supremum and `witness` reproduces it when re-evaluated.
struct OscillationProfile {
  /// interval | partition | point
  std::string target;
  std::string integrand;
  std::string space;
  double estimate = 0.0;
  /// [l, r] for intervals, the partition points, or [t] for a point.
  std::vector<double> location;
  /// Window radii (point case), largest first.
  std::vector<double> schedule;
  /// Per window (point case) or per interval (partition case).
  std::vector<double> window_estimates;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool witness_assisted = true;
  /// Point case: window estimates are non-increasing as the radius shrinks.
  bool monotone = true;
  std::optional<std::pair<Point, Point>> witness;
};

struct MeasureEstimate {
  double r = 0.0;
  std::size_t grid = 0;
  double step = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t confirmed = 0;
  std::size_t clean = 0;
  /// Grid values, outer-window estimates and classes (confirmed | clean | unresolved).
  std::vector<double> points;
  std::vector<double> estimates;
  std::vector<std::string> classes;
};

/// Measure of a finite union of closed intervals; throws DomainError on l > r
/// or non-finite ends.
double interval_measure(std::span<const std::pair<double, double>> intervals);

/// Sample points for [l, r]: both ends, the center, the witness at the
/// center (radius half the width) and `samples` random generic points.
std::vector<Point> window_points(const Integrand& f, const Point& l, const Point& r, const OscillationSampler& sampler,
                                 std::uint64_t seed);

OscillationProfile oscillation_on_interval(const Integrand& f, const Point& l, const Point& r,
                                           const OscillationSampler& sampler = {});

OscillationProfile oscillation_sum(const Integrand& f, const Partition& p, const OscillationSampler& sampler = {});

/// Radii 2^-3 ... 2^-16 times (b - a).
std::vector<double> default_delta_schedule(double a = 0.0, double b = 1.0);

/// Windows [t - delta, t + delta] clipped to [a, b]. Windows are sampled
/// smallest first and every window reuses the samples of the smaller ones,
/// so estimates never increase as delta shrinks. The reported value is the
/// smallest window's estimate.
OscillationProfile pointwise_oscillation(const Integrand& f, const Point& t, std::span<const double> deltas,
                                         const OscillationSampler& sampler = {}, double a = 0.0, double b = 1.0);

/// Oscillation sums along uniform levels; passes at the first level below
/// eps, otherwise reports the smallest sum seen as the persistent bound.
CriterionReport darboux_probe(const Integrand& f, double a, double b, std::span<const std::size_t> levels, double eps,
                              const OscillationSampler& sampler = {});

/// Brackets m(E_r) on a uniform grid t_j with step h. Each grid point gets
/// an inner window of radius h/4 and an outer one of radius h. The upper
/// bound counts half-cells outside every open window (t_j - h, t_j + h)
/// whose estimate stays below r. The lower bound counts half-cells inside
/// a core [t_j - h/2, t_j + h/2] whose inner estimate reaches r, minus the
/// clean ones.
MeasureEstimate discontinuity_measure(const Integrand& f, double a, double b, double r, std::size_t grid,
                                      const OscillationSampler& sampler = {});

/// Same bracket for several thresholds from one pass over the grid.
std::vector<MeasureEstimate> discontinuity_measures(const Integrand& f, double a, double b, std::span<const double> rs,
                                                    std::size_t grid, const OscillationSampler& sampler = {});

}  // namespace metrivec
