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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metrivec/integrand.hpp"
#include "metrivec/oscillation.hpp"
#include "metrivec/partitions.hpp"

namespace metrivec {

/// An integrand on [0, 1] with analytic metadata.
struct GalleryFunction {
  Integrand f;
  /// CLI id with truncations spelled out, e.g. "rationals:1000".
  std::string id;
  /// Known discontinuity structure of the truncated object.
  std::string structure;
  /// Truncation parameters (name, value) as they appear in reports.
  std::vector<std::pair<std::string, double>> truncation;
  /// Rationals only: the largest gap between consecutive enumerated points.
  std::optional<double> resolution;
  /// Smooth functions only.
  std::function<Vector(const Point&)> antiderivative;
  std::function<Vector(const Point&)> derivative;
};

/// r_1, r_2, ... : 0, 1, then p/q in lowest terms by increasing q, then p.
std::vector<Rational> rational_enumeration(std::size_t n_max);

/// f(r_n) = e_n for n <= n_max on exact rational inputs, zero elsewhere.
/// Needs a sequence space with M >= n_max or l1gamma.
GalleryFunction rational_enumeration_function(std::size_t n_max, const Space& codomain);

/// f(t) = (c_1(t), ..., c_K(t)) with the terminating expansion at dyadic
/// rationals, and f(1) = 0. The witness flips the first digit k with
/// 2^-k within the radius.
/// Refutation note carried by the digit function into linf.
inline constexpr std::string_view digits_linf_note = "open-question:digits-linf-integrability-disputed";

GalleryFunction binary_digit_function(std::size_t k, const Space& codomain);

/// e_1 on exact rationals, zero on generic points.
GalleryFunction rational_indicator(const Space& codomain = Space::l1_gamma());

/// linear (t), poly12 (t, t^2), trig (sin t, cos t), mixed (t, t^2, sin t,
/// e^-t), const (1, -1/2). The default codomain is euclidean of the
/// matching dimension.
GalleryFunction smooth_function(std::string_view name, std::optional<Space> codomain = std::nullopt);
std::vector<std::string> smooth_names();
std::vector<GalleryFunction> smooth_calibration_set(std::optional<Space> codomain = std::nullopt);

/// Resolves rationals[:Nmax] | digits[:K] | ratind | smooth:<name>.
GalleryFunction make_gallery(std::string_view id, const Space& codomain);
inline constexpr std::string_view gallery_grammar = "rationals[:<Nmax>] | digits[:<K>] | ratind | smooth:<name>";

struct AdversaryResult {
  std::string function;
  std::string space;
  double r = 0.0;
  std::size_t n = 0;
  TaggedPartition first;
  TaggedPartition second;
  /// Intervals whose oscillation estimate reached r.
  std::vector<std::size_t> meeting;
  MeasureEstimate measure;
  double achieved = 0.0;
  double floor = 0.0;
  bool meets_floor = false;
  std::vector<std::string> annotations;
};

/// Two taggings of the uniform N-partition of [0, 1]. Intervals whose
/// oscillation estimate reaches r get tags u (center) and v (witness with
/// separation r/2); the rest share the center. Floor r m(E_r)/4 uses the
/// lower measure bracket on the same grid. Throws ConstructionError when
/// the witness misses r/2.
AdversaryResult adversary_partitions(const GalleryFunction& g, double r, std::size_t n,
                                     const OscillationSampler& sampler = {});

struct CoordinateContinuityReport {
  double t = 0.0;
  std::size_t coordinates = 0;
  std::vector<double> deltas;
  /// Per-coordinate estimate in the smallest window.
  std::vector<double> coordinate_estimates;
  std::string product_space;
  /// Product-metric estimates per window, largest window first.
  std::vector<double> product_estimates;
  /// Largest contribution coordinates beyond `coordinates` can make.
  double tail = 0.0;
  bool coordinatewise_continuous = false;
  bool product_to_zero = false;
  bool agree = false;
};

/// Both sides of the coordinatewise continuity equivalence at t, from one
/// shared nested sample set. `product` must be omega-sup or omega-sum and
/// defaults to omega-sup with f's truncation.
CoordinateContinuityReport coordinate_continuity_probe(const Integrand& f, const Point& t, std::size_t coordinates,
                                                       std::span<const double> deltas,
                                                       const OscillationSampler& sampler = {},
                                                       std::optional<Space> product = std::nullopt);

}  // namespace metrivec
