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
#include <utility>
#include <vector>

#include "metrivec/errors.hpp"
#include "metrivec/gallery.hpp"
#include "metrivec/oscillation.hpp"
#include "metrivec/random.hpp"

using namespace metrivec;

namespace {

double reevaluate(const Integrand& f, const std::pair<Point, Point>& w) { return f.space().metric(f(w.first), f(w.second)); }

}  // namespace

TEST_SUITE("oscillation") {
  TEST_CASE("interval measure") {
    using I = std::pair<double, double>;
    std::vector<I> a{{0, 0.5}, {0.25, 0.75}};
    CHECK(interval_measure(a) == 0.75);
    CHECK(interval_measure(std::vector<I>{}) == 0.0);
    std::vector<I> b{{0, 0.3}, {0.5, 0.6}};
    CHECK(interval_measure(b) == doctest::Approx(0.4));
    std::vector<I> bad{{0.5, 0.2}};
    CHECK_THROWS_AS(interval_measure(bad), DomainError);
  }

  TEST_CASE("oscillation on intervals") {
    auto c = smooth_function("const").f;
    CHECK(oscillation_on_interval(c, Point::rational(0, 1), Point::rational(1, 1)).estimate == 0.0);

    auto t = smooth_function("linear").f;
    auto prof = oscillation_on_interval(t, Point::generic(0.2), Point::generic(0.5));
    CHECK(prof.estimate <= 0.3 + 1e-15);
    CHECK(prof.estimate >= 0.3 - 1e-15);

    auto d = binary_digit_function(16, Space::linf(16)).f;
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
      double w = std::ldexp(1.0, -15) * (1 + rng.uniform() * 100);
      double l = rng.uniform(0, 1 - w);
      auto p = oscillation_on_interval(d, Point::generic(l), Point::generic(l + w));
      CHECK(p.estimate >= 1.0);
      REQUIRE(p.witness);
      CHECK(reevaluate(d, *p.witness) == doctest::Approx(p.estimate).epsilon(1e-12));
    }
  }

  TEST_CASE("oscillation sums") {
    auto c = smooth_function("const").f;
    CHECK(oscillation_sum(c, uniform_points(0, 1, 10)).estimate == 0.0);
    auto t = smooth_function("linear").f;
    for (std::size_t n : {4u, 10u, 100u}) {
      CHECK(oscillation_sum(t, uniform_points(0, 1, n)).estimate == doctest::Approx(1.0 / n).epsilon(1e-12));
    }
    auto d = binary_digit_function(16, Space::linf(16)).f;
    for (std::size_t n : {1u, 7u, 64u, 1000u}) CHECK(oscillation_sum(d, uniform_points(0, 1, n)).estimate >= 1 - 1e-9);
  }

  TEST_CASE("oscillation sums shrink under refinement up to slack") {
    auto d = binary_digit_function(16, Space::omega_sum(16)).f;
    auto r = rational_enumeration_function(1000, Space::omega_sup(1000)).f;
    for (const auto* f : {&d, &r}) {
      for (std::size_t n : {64u, 256u}) {
        double coarse = oscillation_sum(*f, uniform_points(0, 1, n)).estimate;
        double fine = oscillation_sum(*f, uniform_points(0, 1, 2 * n)).estimate;
        CAPTURE(f->id());
        CHECK(fine <= coarse + 1e-2);
      }
    }
  }

  TEST_CASE("pointwise oscillation of a continuous function vanishes") {
    auto f = smooth_function("trig").f;
    auto deltas = default_delta_schedule();
    auto prof = pointwise_oscillation(f, Point::generic(0.37), deltas);
    CHECK(prof.monotone);
    CHECK(prof.estimate < 1e-4);
    CHECK(prof.window_estimates.front() > prof.window_estimates.back());
    CHECK_THROWS_AS(pointwise_oscillation(f, Point::generic(1.5), deltas), DomainError);
  }

  TEST_CASE("pointwise oscillation at endpoints uses one-sided windows") {
    auto f = smooth_function("linear").f;
    std::vector<double> deltas{0.25};
    auto prof = pointwise_oscillation(f, Point::rational(0, 1), deltas);
    CHECK(prof.estimate == doctest::Approx(0.25));
  }

  TEST_CASE("rational enumeration: oscillation depends on the metric") {
    auto l2 = rational_enumeration_function(1000, Space::lp(2, 1000)).f;
    auto sup = rational_enumeration_function(1000, Space::omega_sup(1000));
    auto pts = rational_enumeration(1000);
    std::vector<double> coarse;
    for (int k = 3; k <= 6; ++k) coarse.push_back(std::ldexp(1.0, -k));
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
      Point t = Point::generic(rng.uniform());
      auto p2 = pointwise_oscillation(l2, t, coarse);
      CHECK(p2.estimate >= 1.0);
      CHECK(p2.monotone);
      for (std::size_t n : {10u, 100u}) {
        double dist = 1.0;
        for (std::size_t k = 0; k < n; ++k) dist = std::min(dist, std::abs(pts[k].value() - t.value()));
        std::vector<double> excl{dist / 2, dist / 4};
        auto ps = pointwise_oscillation(sup.f, t, excl);
        CHECK(ps.estimate <= 1.0 / (n + 1) + 1e-12);
      }
    }
  }

  TEST_CASE("darboux probe") {
    auto t = smooth_function("linear").f;
    auto levels = geometric_levels(8, 16384);
    auto rep = darboux_probe(t, 0, 1, levels, 0.01);
    CHECK(rep.status == "pass");
    CHECK(rep.levels.back().intervals >= 100);
    CHECK(rep.levels.back().worst < 0.01);

    auto d = binary_digit_function(16, Space::linf(16)).f;
    auto fail = darboux_probe(d, 0, 1, geometric_levels(8, 4096), 0.5);
    CHECK(fail.status == "fail");
    CHECK(fail.worst >= 1.0);
    for (const auto& l : fail.levels) CHECK(l.worst >= 1.0);

    auto ds = binary_digit_function(16, Space::omega_sum(16)).f;
    auto pass = darboux_probe(ds, 0, 1, levels, 0.05);
    CHECK(pass.status == "pass");
    CHECK(pass.levels.back().mesh >= std::ldexp(1.0, -12));

    for (const auto& g : smooth_calibration_set()) CHECK(darboux_probe(g.f, 0, 1, levels, 1e-3).status == "pass");
  }

  TEST_CASE("discontinuity measure brackets") {
    auto smooth = smooth_function("mixed").f;
    auto m = discontinuity_measure(smooth, 0, 1, 0.05, 512);
    CHECK(m.upper == 0.0);
    CHECK(m.lower == 0.0);

    auto ri = rational_indicator().f;
    auto r1 = discontinuity_measure(ri, 0, 1, 1.0, 256);
    CHECK(r1.lower == 1.0);
    CHECK(r1.upper == 1.0);

    auto ds = binary_digit_function(16, Space::omega_sum(16)).f;
    auto mdig = discontinuity_measure(ds, 0, 1, 0.1, 4096);
    CHECK(mdig.upper < 0.01);
    CHECK(mdig.lower <= mdig.upper);

    auto coarse = discontinuity_measure(ds, 0, 1, 0.1, 256);
    CHECK(coarse.upper >= mdig.upper);

    const double rs[] = {0.05, 0.1, 0.5};
    for (const auto& e : discontinuity_measures(rational_enumeration_function(1000, Space::omega_sup(1000)).f, 0, 1,
                                                rs, 512)) {
      CHECK(0.0 <= e.lower);
      CHECK(e.lower <= e.upper);
      CHECK(e.upper <= 1.0);
    }
  }

  TEST_CASE("estimates are deterministic for a fixed seed") {
    auto f = rational_enumeration_function(1000, Space::lp(1, 1000)).f;
    OscillationSampler s;
    s.seed = 77;
    auto a = oscillation_sum(f, uniform_points(0, 1, 33), s);
    auto b = oscillation_sum(f, uniform_points(0, 1, 33), s);
    CHECK(a.window_estimates == b.window_estimates);
  }
}
