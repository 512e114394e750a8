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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metrivec/integrand.hpp"
#include "metrivec/integration.hpp"

namespace metrivec {

/// F(t_j) = integral of f over [a, t_j] on G equally spaced points.
struct PrimitiveTable {
  std::string integrand;
  std::string space;
  std::vector<double> points;
  std::vector<Vector> values;
  /// Per entry; F(a) is always converged.
  std::vector<bool> converged;
  /// reports[j] belongs to points[j + 1].
  std::vector<IntegrationReport> reports;
};

PrimitiveTable primitive(const Integrand& f, double a, double b, std::size_t grid, const IntegrateConfig& config = {});

struct DerivativeProbeConfig {
  /// Threshold relative to the first ratio.
  double rel = 1e-2;
  /// Added to the threshold; absorbs rounding in exactly linear cases.
  double abs_floor = 1e-8;
  /// Domain used to pick one-sided steps at the ends.
  double a = 0.0;
  double b = 1.0;
};

struct DerivativeProbeReport {
  double t = 0.0;
  std::string space;
  Vector candidate;
  std::vector<double> steps;
  std::vector<double> ratios;
  double threshold = 0.0;
  bool verdict = false;
};

using Curve = std::function<Vector(double)>;

/// rho_m = max over in-domain sides of d(0, phi(t + s) - phi(t) - s x) / |s|.
/// Verdict: the last three ratios are below threshold and non-increasing
/// up to a tenth of the threshold.
DerivativeProbeReport differentiability_probe(const Curve& phi, const Space& space, double t, const Vector& x,
                                              std::span<const double> steps, const DerivativeProbeConfig& config = {});

/// Steps 2^-lo ... 2^-hi.
std::vector<double> dyadic_steps(int lo, int hi);

struct FtcReport {
  std::string space;
  double a = 0.0;
  double tau = 1.0;
  /// d(integral of F', F(tau) - F(a)) for the integrate estimate.
  double residual = 0.0;
  /// False when the integration did not converge.
  bool reliable = false;
  IntegrationReport integration;
  /// Midpoint-sum residual at every level of the schedule.
  std::vector<LevelRecord> level_residuals;
  /// Largest pointwise oscillation of F' seen by the optional pre-check.
  std::optional<double> continuity_max_oscillation;
};

struct FtcConfig {
  IntegrateConfig integrate;
  bool precheck_continuity = false;
  std::size_t precheck_points = 16;
};

FtcReport ftc_check(const Curve& F, const Integrand& derivative, double a, double tau, const FtcConfig& config = {});

}  // namespace metrivec
