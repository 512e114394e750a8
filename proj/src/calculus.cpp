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

#include "metrivec/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "metrivec/errors.hpp"
#include "metrivec/oscillation.hpp"

namespace metrivec {

PrimitiveTable primitive(const Integrand& f, double a, double b, std::size_t grid, const IntegrateConfig& config) {
  if (grid < 2) throw DomainError("primitive needs a grid of at least 2 points");
  if (!(a < b)) throw DomainError("primitive needs a < b");
  PrimitiveTable table;
  table.integrand = f.id();
  table.space = f.space().to_string();
  Partition pts = uniform_points(a, b, grid - 1);
  table.points = pts.values();
  table.values.push_back(f.space().zero());
  table.converged.push_back(true);
  for (std::size_t j = 1; j < grid; ++j) {
    auto rep = integrate(f, a, table.points[j], config);
    table.values.push_back(rep.estimate);
    table.converged.push_back(rep.converged);
    table.reports.push_back(std::move(rep));
  }
  return table;
}

std::vector<double> dyadic_steps(int lo, int hi) {
  std::vector<double> out;
  for (int k = lo; k <= hi; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

DerivativeProbeReport differentiability_probe(const Curve& phi, const Space& space, double t, const Vector& x,
                                              std::span<const double> steps, const DerivativeProbeConfig& config) {
  if (steps.empty()) throw DomainError("differentiability probe needs a step schedule");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!(steps[i] > 0) || (i > 0 && !(steps[i] < steps[i - 1]))) {
      throw DomainError("step schedule must be positive and strictly decreasing");
    }
  }
  DerivativeProbeReport rep;
  rep.t = t;
  rep.space = space.to_string();
  rep.candidate = x;
  rep.steps.assign(steps.begin(), steps.end());
  const Vector base = phi(t);
  for (double s : steps) {
    double ratio = -1.0;
    for (double side : {s, -s}) {
      const double u = t + side;
      if (u < config.a || u > config.b) continue;
      Vector rem = space.sub(space.sub(phi(u), base), space.scale(side, x));
      ratio = std::max(ratio, space.magnitude(rem) / s);
    }
    if (ratio < 0) throw DomainError("step " + Point::generic(s).to_string() + " leaves the domain on both sides");
    rep.ratios.push_back(ratio);
  }
  rep.threshold = config.rel * rep.ratios.front() + config.abs_floor;
  if (rep.ratios.size() >= 3) {
    const std::size_t n = rep.ratios.size();
    const double slack = rep.threshold / 10;
    rep.verdict = true;
    for (std::size_t i = n - 3; i < n; ++i) {
      if (rep.ratios[i] > rep.threshold) rep.verdict = false;
      if (i > n - 3 && rep.ratios[i] > rep.ratios[i - 1] + slack) rep.verdict = false;
    }
  }
  return rep;
}

FtcReport ftc_check(const Curve& F, const Integrand& derivative, double a, double tau, const FtcConfig& config) {
  if (!(a < tau)) throw DomainError("ftc check needs a < tau");
  const Space& space = derivative.space();
  FtcReport rep;
  rep.space = space.to_string();
  rep.a = a;
  rep.tau = tau;
  const Vector target = space.sub(F(tau), F(a));
  rep.integration = integrate(derivative, a, tau, config.integrate);
  rep.residual = space.metric(rep.integration.estimate, target);
  rep.reliable = rep.integration.converged;
  for (std::size_t n : config.integrate.levels) {
    Partition p = uniform_points(a, tau, n);
    Vector s = riemann_sum(derivative, with_tags(p, TagRule::midpoint));
    rep.level_residuals.push_back({n, mesh(p), space.metric(s, target), 1});
  }
  if (config.precheck_continuity) {
    double worst = 0.0;
    const double len = tau - a;
    std::vector<double> deltas{len / 64, len / 1024};
    Partition grid = uniform_points(a, tau, std::max<std::size_t>(config.precheck_points, 2) - 1);
    OscillationSampler sampler;
    sampler.seed = config.integrate.seed;
    for (const Point& t : grid.points()) {
      worst = std::max(worst, pointwise_oscillation(derivative, t, deltas, sampler, a, tau).estimate);
    }
    rep.continuity_max_oscillation = worst;
  }
  return rep;
}

}  // namespace metrivec
