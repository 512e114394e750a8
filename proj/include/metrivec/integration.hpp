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
#include <string>
#include <utility>
#include <vector>

#include "metrivec/integrand.hpp"
#include "metrivec/partitions.hpp"

namespace metrivec {

/// One row of a convergence table.
struct LevelRecord {
  std::size_t intervals = 0;
  double mesh = 0.0;
  /// Worst pairwise distance among the level's Riemann sums (or the
  /// oscillation sum, for Darboux tables).
  double worst = 0.0;
  std::size_t samples = 0;
};

/// Interval counts N, 2N, ..., up to `finest` (both powers of two apart).
std::vector<std::size_t> geometric_levels(std::size_t coarsest, std::size_t finest);
/// Mesh halving from (b-a)/8 down to (b-a)/2^14.
std::vector<std::size_t> default_levels();

struct IntegrateConfig {
  double eps = 1e-4;
  std::vector<std::size_t> levels = default_levels();
  std::size_t tag_samples = 8;
  std::uint64_t seed = 0;
};

/// Result of `integrate`.
///
/// The check is sampled: a non-converged report carries a refuting pair,
/// a converged one is evidence only. delta is the finest mesh attempted.
struct IntegrationReport {
  std::string integrand;
  std::string space;
  double a = 0.0;
  double b = 1.0;
  Vector estimate;
  std::vector<LevelRecord> levels;
  bool converged = false;
  double eps = 0.0;
  double delta = 0.0;
  std::size_t tag_samples = 0;
  std::uint64_t seed = 0;
  std::string evidence;
  std::vector<std::string> annotations;
};

using PartitionPair = std::pair<TaggedPartition, TaggedPartition>;

struct CriterionReport {
  /// mesh-cauchy | refinement-cauchy | same-points | variation | darboux
  std::string criterion;
  std::string integrand;
  std::string space;
  double worst = 0.0;
  std::optional<PartitionPair> witness;
  /// Interval collection realizing `worst` (variation criterion).
  std::vector<std::pair<Point, Point>> witness_intervals;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<double> eps;
  /// refuted-with-witness | no-violation-found | observed | pass | fail
  std::string status;
  std::vector<LevelRecord> levels;
  std::vector<std::string> annotations;
};

/// sum_i (t_i - t_{i-1}) f(s_i), accumulated left to right.
Vector riemann_sum(const Integrand& f, const TaggedPartition& p);

/// Tag samples for one partition: midpoint, the adversarial pair when f has
/// a witness oracle, left, right, then seeded-random taggings, cut to
/// `count` (at least 2).
std::vector<TaggedPartition> sample_taggings(const Integrand& f, const Partition& p, std::size_t count,
                                             std::uint64_t seed);

/// Same-points tag pair built from f's witness oracle: each interval gets
/// its midpoint u and a witness v, oriented greedily (left to right) so
/// the running difference of the two Riemann sums grows.
PartitionPair adversarial_taggings(const Integrand& f, const Partition& p);

IntegrationReport integrate(const Integrand& f, double a, double b, const IntegrateConfig& config = {});

struct ProbeConfig {
  std::size_t samples = 32;
  std::uint64_t seed = 0;
  /// Threshold separating "refuted-with-witness" from "no-violation-found".
  std::optional<double> eps;
};

/// Pairs of tagged partitions with mesh < `mesh`.
CriterionReport mesh_cauchy_probe(const Integrand& f, double a, double b, double mesh, const ProbeConfig& config = {});
/// Pairs of tagged partitions refining `base`.
CriterionReport refinement_cauchy_probe(const Integrand& f, const Partition& base, const ProbeConfig& config = {});

enum class TagSearch { seeded_random, adversarial };

/// Pairs of taggings of exactly the points of `points`. Adversarial mode
/// throws CapabilityError when f has no witness oracle.
CriterionReport same_points_probe(const Integrand& f, const Partition& points, TagSearch search,
                                  const ProbeConfig& config = {});

struct VariationConfig {
  std::size_t collections = 256;
  std::size_t max_intervals = 64;
  std::uint64_t seed = 0;
};

/// Lower bound for sup d(0, sum_i (f(d_i) - f(c_i))) over finite collections
/// of nonoverlapping [c_i, d_i] in [a, b].
CriterionReport variation_bound_estimate(const Integrand& f, double a, double b, const VariationConfig& config = {});

/// Re-evaluates a variation witness collection.
double variation_of(const Integrand& f, const std::vector<std::pair<Point, Point>>& collection);

}  // namespace metrivec
