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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "metrivec/calculus.hpp"
#include "metrivec/errors.hpp"
#include "metrivec/gallery.hpp"
#include "metrivec/oscillation.hpp"

using namespace metrivec;

TEST_SUITE("calculus") {
  TEST_CASE("primitive of a constant") {
    auto g = smooth_function("const");
    auto table = primitive(g.f, 0, 1, 5);
    REQUIRE(table.points.size() == 5);
    CHECK(table.values[0] == g.f.space().zero());
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(table.converged[j]);
      CHECK(table.values[j].coords()[0] == doctest::Approx(table.points[j]).epsilon(1e-15));
      CHECK(table.values[j].coords()[1] == doctest::Approx(-0.5 * table.points[j]).epsilon(1e-15));
    }
    CHECK_THROWS_AS(primitive(g.f, 0, 1, 1), DomainError);
  }

  TEST_CASE("primitive of cos matches sin") {
    Space s = Space::euclidean(1);
    Integrand f("cos", s, [s](const Point& t) { return s.from_coords({std::cos(t.value())}); });
    auto table = primitive(f, 0, 1, 9);
    for (std::size_t j = 0; j < table.points.size(); ++j) {
      CHECK(std::abs(table.values[j].coords()[0] - std::sin(table.points[j])) < 1e-6);
    }
  }

  TEST_CASE("primitive of an affine integrand is exact to rounding") {
    auto g = smooth_function("linear");
    auto table = primitive(g.f, 0, 1, 7);
    for (std::size_t j = 0; j < table.points.size(); ++j) {
      CHECK(table.values[j].coords()[0] == doctest::Approx(table.points[j] * table.points[j] / 2).epsilon(1e-13));
    }
  }

  TEST_CASE("primitive is additive") {
    auto g = smooth_function("trig", Space::omega_sum(8));
    IntegrateConfig cfg;
    auto table = primitive(g.f, 0, 1, 6, cfg);
    const Space& s = g.f.space();
    for (std::size_t j = 0; j + 1 < table.points.size(); ++j) {
      auto piece = integrate(g.f, table.points[j], table.points[j + 1], cfg);
      double diff = s.metric(s.sub(table.values[j + 1], table.values[j]), piece.estimate);
      CHECK(diff <= 2 * (cfg.eps + cfg.eps));
    }
  }

  TEST_CASE("differentiability: exact quadratic remainder") {
    Space s = Space::euclidean(1);
    auto phi = [s](double t) { return s.from_coords({t * t}); };
    std::vector<double> steps;
    for (int k = 1; k <= 6; ++k) steps.push_back(std::pow(10.0, -k));
    auto rep = differentiability_probe(phi, s, 1.0, s.from_coords({2.0}), steps);
    for (std::size_t m = 0; m < steps.size(); ++m) CHECK(rep.ratios[m] == doctest::Approx(steps[m]).epsilon(1e-6));
    CHECK(rep.verdict);
  }

  TEST_CASE("differentiability: kink") {
    Space s = Space::euclidean(1);
    auto phi = [s](double t) { return s.from_coords({std::abs(t)}); };
    DerivativeProbeConfig cfg;
    cfg.a = -1;
    cfg.b = 1;
    auto steps = dyadic_steps(1, 12);
    auto rep = differentiability_probe(phi, s, 0.0, s.zero(), steps, cfg);
    for (double r : rep.ratios) CHECK(r == 1.0);
    CHECK_FALSE(rep.verdict);
  }

  TEST_CASE("differentiability: linear curves pass despite rounding") {
    Space s = Space::lp(2, 3);
    auto phi = [s](double t) { return s.from_coords({3 * t, -t}); };
    auto steps = dyadic_steps(3, 30);
    CHECK(differentiability_probe(phi, s, 0.3, s.from_coords({3, -1}), steps).verdict);
  }

  TEST_CASE("differentiability rejects bad schedules") {
    Space s = Space::euclidean(1);
    auto phi = [s](double t) { return s.from_coords({t}); };
    std::vector<double> bad{0.1, 0.2};
    CHECK_THROWS_AS(differentiability_probe(phi, s, 0.5, s.zero(), bad), DomainError);
  }

  TEST_CASE("numerical primitive is differentiable with derivative f") {
    auto g = smooth_function("trig");
    IntegrateConfig cfg;
    cfg.tag_samples = 3;
    // one fixed level so the primitive does not jump with the stopping level
    cfg.levels = {std::size_t{1} << 16};
    auto phi = [&](double t) { return t == 0.0 ? g.f.space().zero() : integrate(g.f, 0, t, cfg).estimate; };
    auto steps = dyadic_steps(3, 14);
    for (double t : {0.3, 0.71}) {
      auto rep = differentiability_probe(phi, g.f.space(), t, g.f(t), steps);
      CAPTURE(t);
      CHECK(rep.verdict);
    }
  }

  TEST_CASE("remainder ratios are bounded by the local oscillation") {
    for (const char* name : {"poly12", "trig"}) {
      auto g = smooth_function(name);
      const double t = 0.4;
      auto steps = dyadic_steps(2, 10);
      auto rep = differentiability_probe([&](double u) { return g.antiderivative(Point::generic(u)); }, g.f.space(), t,
                                         g.f(t), steps);
      for (std::size_t m = 0; m < steps.size(); ++m) {
        auto osc = oscillation_on_interval(g.f, Point::generic(t - steps[m]), Point::generic(t + steps[m]));
        CHECK(rep.ratios[m] <= osc.estimate + 1e-12);
      }
    }
  }

  TEST_CASE("ftc: trig into omega-sum(8)") {
    auto g = smooth_function("trig", Space::omega_sum(8));
    Integrand deriv("trig'", g.f.space(), g.derivative);
    FtcConfig cfg;
    cfg.integrate.eps = 1e-3;
    cfg.integrate.levels = geometric_levels(8, 4096);
    auto rep = ftc_check([&](double t) { return g.f(t); }, deriv, 0, 1, cfg);
    CHECK(rep.reliable);
    CHECK(rep.residual < 1e-5);
    CHECK(rep.level_residuals.back().mesh == std::ldexp(1.0, -12));
    CHECK(rep.level_residuals.back().worst < 1e-5);
  }

  TEST_CASE("ftc: constant and quadratic") {
    Space s = Space::euclidean(1);
    Integrand zero("0", s, [s](const Point&) { return s.zero(); });
    auto rep0 = ftc_check([s](double) { return s.from_coords({5.0}); }, zero, 0, 1);
    CHECK(rep0.residual == 0.0);
    Integrand two_t("2t", s, [s](const Point& t) { return s.from_coords({2 * t.value()}); });
    auto rep = ftc_check([s](double t) { return s.from_coords({t * t}); }, two_t, 0, 1);
    CHECK(rep.residual < 1e-6);
  }

  TEST_CASE("ftc residuals shrink across the schedule for smooth functions") {
    for (const auto& g : smooth_calibration_set()) {
      if (g.id == "smooth:const" || g.id == "smooth:linear") continue;  // midpoint rule is exact there
      Integrand deriv(g.id + "'", g.f.space(), g.derivative);
      FtcConfig cfg;
      cfg.integrate.levels = geometric_levels(8, 1024);
      auto rep = ftc_check([&](double t) { return g.f(t); }, deriv, 0, 1, cfg);
      CAPTURE(g.id);
      for (std::size_t i = 1; i < rep.level_residuals.size(); ++i) {
        // midpoint error drops by about 4 per halving; poly12 is exact up to rounding
        CHECK(rep.level_residuals[i].worst <= 0.5 * rep.level_residuals[i - 1].worst + 1e-14);
      }
    }
  }

  TEST_CASE("ftc optional continuity pre-check") {
    auto g = smooth_function("poly12");
    Integrand deriv("poly12'", g.f.space(), g.derivative);
    FtcConfig cfg;
    cfg.precheck_continuity = true;
    auto rep = ftc_check([&](double t) { return g.f(t); }, deriv, 0, 1, cfg);
    REQUIRE(rep.continuity_max_oscillation);
    CHECK(*rep.continuity_max_oscillation < 0.1);
  }
}
