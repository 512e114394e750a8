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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metrivec {

enum class Repr { dense, sequence, sparse };

/// Element of a metric vector space.
///
/// dense: exactly n coordinates. sequence: a prefix of at most M
/// coordinates with implicit zeros beyond (trailing zeros are trimmed, so
/// equal sequences compare equal). sparse: label -> value with no stored
/// zeros.
class Vector {
 public:
  Vector() = default;

  static Vector dense(std::vector<double> coords);
  static Vector sequence(std::vector<double> head);
  static Vector sparse(std::map<std::string, double> entries);

  Repr repr() const { return repr_; }
  std::span<const double> coords() const { return coords_; }
  const std::map<std::string, double>& entries() const { return entries_; }

  /// Coordinate i (0-based). Sparse vectors look up label std::to_string(i + 1).
  double coordinate(std::size_t i) const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  Repr repr_ = Repr::dense;
  std::vector<double> coords_;
  std::map<std::string, double> entries_;
};

enum class SpaceKind { euclidean, omega_sup, omega_sum, lp, linf, l1_gamma };

enum class ScalingFlag { holds, violated, unknown };

std::string to_string(ScalingFlag flag);

/// A metric vector space backend.
///
/// All shipped metrics depend only on x - y, so every backend is
/// translation invariant. Reductions run left to right over coordinates.
class Space {
 public:
  static Space euclidean(std::size_t n);
  static Space omega_sup(std::size_t m);
  static Space omega_sum(std::size_t m);
  static Space lp(double p, std::size_t m);
  static Space linf(std::size_t m);
  static Space l1_gamma();

  /// Grammar: euclidean:<n> | omega-sup:<M> | omega-sum:<M> | lp:<p>:<M> |
  /// linf:<M> | l1gamma. The trailing :<M> may be omitted for sequence
  /// spaces, in which case `default_m` is used.
  static Space parse(std::string_view text, std::size_t default_m = 64);
  static constexpr std::string_view grammar =
      "euclidean:<n> | omega-sup:<M> | omega-sum:<M> | lp:<p>:<M> | linf:<M> | l1gamma";

  std::string to_string() const;

  SpaceKind kind() const { return kind_; }
  /// n for euclidean, M for sequence spaces, 0 for l1gamma.
  std::size_t dimension() const { return dim_; }
  double p() const { return p_; }

  Repr repr() const;
  bool is_sequence() const;
  bool is_product() const { return kind_ == SpaceKind::omega_sup || kind_ == SpaceKind::omega_sum; }
  bool is_normed() const { return !is_product(); }
  bool translation_invariant() const { return true; }
  /// Whether d(lx, ly) <= l d(x, y) holds for l in [0, 1).
  ScalingFlag scaling_flag() const { return is_product() ? ScalingFlag::violated : ScalingFlag::holds; }
  /// Annotations attached to reports computed in this space.
  std::vector<std::string> hypothesis_annotations() const;

  Vector zero() const;
  /// Unit vector e_n, n >= 1.
  Vector basis(std::size_t n) const;
  /// Coordinates 1..k; sparse spaces use labels "1".."k".
  Vector from_coords(std::vector<double> coords) const;

  Vector add(const Vector& x, const Vector& y) const;
  Vector sub(const Vector& x, const Vector& y) const;
  Vector scale(double lambda, const Vector& x) const;
  double metric(const Vector& x, const Vector& y) const;
  /// d(0, x).
  double magnitude(const Vector& x) const;

  /// Throws StructuralError unless x belongs to this space.
  void check(const Vector& x) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  Space(SpaceKind kind, std::size_t dim, double p) : kind_(kind), dim_(dim), p_(p) {}

  template <class Op>
  Vector combine(const Vector& x, const Vector& y, Op op) const;

  SpaceKind kind_ = SpaceKind::euclidean;
  std::size_t dim_ = 1;
  double p_ = 2.0;
};

/// Worst-case pair or triple found by a metric probe.
struct ProbeWitness {
  Vector x;
  Vector y;
  std::optional<Vector> z;
  std::optional<double> lambda;
  double violation = 0.0;
};

struct MetricProbeReport {
  std::string property;
  std::string space;
  std::size_t samples = 0;
  /// Largest raw violation seen, never negative.
  double worst_violation = 0.0;
  /// Samples whose violation exceeded `tolerance`.
  std::size_t violations = 0;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// Present iff worst_violation > tolerance.
  std::optional<ProbeWitness> witness;
};

struct ProbeSampler {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  /// Coordinates are drawn from [-range, range].
  double coord_range = 2.0;
  /// When set, y is drawn within this coordinatewise distance of x and the
  /// built-in witness corpus is filtered to respect it.
  std::optional<double> max_coord_diff;
  double tolerance = 1e-9;
};

/// Samples (x, y, z) and reports max |d(x+z, y+z) - d(x, y)|.
MetricProbeReport check_translation_invariance(const Space& space, const ProbeSampler& sampler);

/// Reports max of d(lx, ly) - l d(x, y) over samples and the lambda grid.
/// The search always includes the corpus pair x = 2e_1, y = 0.
MetricProbeReport check_scaling_inequality(const Space& space, const ProbeSampler& sampler,
                                           std::span<const double> lambdas);

std::vector<double> default_lambda_grid();

}  // namespace metrivec
