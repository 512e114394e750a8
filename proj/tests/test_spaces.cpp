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

#include "metrivec/errors.hpp"
#include "metrivec/point.hpp"
#include "metrivec/spaces.hpp"
#include "oracles.hpp"

using namespace metrivec;

TEST_SUITE("spaces") {
  TEST_CASE("grammar round trip") {
    for (const char* s : {"euclidean:3", "omega-sup:12", "omega-sum:8", "lp:2:16", "lp:1.5:16", "linf:5", "l1gamma"}) {
      Space sp = Space::parse(s);
      CHECK(sp.to_string() == s);
      CHECK(Space::parse(sp.to_string()) == sp);
    }
    CHECK(Space::parse("lp:2").dimension() == 64);
    CHECK(Space::parse("linf", 1000).dimension() == 1000);
    CHECK_THROWS_AS(Space::parse("banach:3"), UsageError);
    CHECK_THROWS_AS(Space::parse("lp:0.5:4"), Error);
  }

  TEST_CASE("metrics agree with direct formulas") {
    const std::vector<double> x{0.5, -2.0, 0.25, 3.0};
    const std::vector<double> y{-1.0, 0.5, 0.0, 2.5};
    Space l1 = Space::lp(1, 4), l2 = Space::lp(2, 4), l3 = Space::lp(3, 4), li = Space::linf(4);
    Space osup = Space::omega_sup(4), osum = Space::omega_sum(4), eu = Space::euclidean(4);
    CHECK(l1.metric(l1.from_coords(x), l1.from_coords(y)) == doctest::Approx(oracle::lp_distance(x, y, 1)).epsilon(1e-14));
    CHECK(l2.metric(l2.from_coords(x), l2.from_coords(y)) == doctest::Approx(oracle::lp_distance(x, y, 2)).epsilon(1e-14));
    CHECK(l3.metric(l3.from_coords(x), l3.from_coords(y)) == doctest::Approx(oracle::lp_distance(x, y, 3)).epsilon(1e-14));
    CHECK(eu.metric(eu.from_coords(x), eu.from_coords(y)) == doctest::Approx(oracle::lp_distance(x, y, 2)).epsilon(1e-14));
    CHECK(li.metric(li.from_coords(x), li.from_coords(y)) == 2.5);
    CHECK(osup.metric(osup.from_coords(x), osup.from_coords(y)) == doctest::Approx(oracle::omega_sup(x, y)));
    CHECK(osum.metric(osum.from_coords(x), osum.from_coords(y)) == doctest::Approx(oracle::omega_sum(x, y)));
  }

  TEST_CASE("basis vectors") {
    Space osup = Space::omega_sup(1000);
    for (std::size_t n : {1u, 2u, 7u, 1000u}) CHECK(osup.magnitude(osup.basis(n)) == doctest::Approx(1.0 / n));
    Space l2 = Space::lp(2, 1000);
    CHECK(l2.metric(l2.basis(3), l2.basis(900)) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(l2.basis(1001), CapabilityError);
    Space g = Space::l1_gamma();
    CHECK(g.magnitude(g.add(g.basis(1), g.basis(5))) == 2.0);
  }

  TEST_CASE("sequences compare equal regardless of trailing zeros") {
    Space s = Space::linf(8);
    CHECK(s.from_coords({1, 0, 0}) == s.from_coords({1}));
    CHECK(s.sub(s.basis(3), s.basis(3)) == s.zero());
  }

  TEST_CASE("structural errors") {
    Space e2 = Space::euclidean(2);
    CHECK_THROWS_AS(e2.add(e2.zero(), Vector::dense({1, 2, 3})), StructuralError);
    CHECK_THROWS_AS(e2.from_coords({1, 2, 3}), StructuralError);
    Space s = Space::lp(2, 3);
    CHECK_THROWS_AS(s.check(Vector::sequence({1, 2, 3, 4})), StructuralError);
    CHECK_THROWS_AS(s.check(Vector::sparse({{"1", 1.0}})), StructuralError);
  }

  TEST_CASE("translation invariance holds on every backend") {
    ProbeSampler sampler;
    sampler.samples = 2000;
    for (const char* text : {"euclidean:3", "lp:1:8", "lp:2:8", "lp:3:8", "linf:8", "omega-sup:8", "omega-sum:8", "l1gamma"}) {
      auto rep = check_translation_invariance(Space::parse(text), sampler);
      CAPTURE(text);
      CHECK(rep.violations == 0);
      CHECK_FALSE(rep.witness.has_value());
    }
  }

  TEST_CASE("scaling inequality on normed backends") {
    ProbeSampler sampler;
    sampler.samples = 2000;
    auto grid = default_lambda_grid();
    for (const char* text : {"euclidean:2", "lp:1:8", "lp:2:8", "linf:8", "l1gamma"}) {
      auto rep = check_scaling_inequality(Space::parse(text), sampler, grid);
      CAPTURE(text);
      CHECK(rep.violations == 0);
      CHECK(Space::parse(text).scaling_flag() == ScalingFlag::holds);
    }
  }

  TEST_CASE("scaling inequality fails on product metrics") {
    // d(0.6 * 2e1, 0) = 1 while 0.6 * d(2e1, 0) = 0.6
    Space s = Space::omega_sup(8);
    double lhs = s.metric(s.scale(0.6, s.from_coords({2.0})), s.zero());
    double rhs = 0.6 * s.metric(s.from_coords({2.0}), s.zero());
    CHECK(lhs - rhs == doctest::Approx(0.4));

    ProbeSampler sampler;
    sampler.samples = 200;
    auto grid = default_lambda_grid();
    auto rep = check_scaling_inequality(s, sampler, grid);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.worst_violation >= 0.4 - 1e-9);
    const auto& w = *rep.witness;
    CHECK(s.metric(s.scale(*w.lambda, w.x), s.scale(*w.lambda, w.y)) - *w.lambda * s.metric(w.x, w.y) ==
          doctest::Approx(rep.worst_violation));
    CHECK(s.scaling_flag() == ScalingFlag::violated);
    CHECK(s.hypothesis_annotations() == std::vector<std::string>{"scaling-inequality-violated"});
    CHECK(check_scaling_inequality(Space::omega_sum(8), sampler, grid).worst_violation > 0.1);
  }

  TEST_CASE("scaling probe rejects lambdas outside [0, 1)") {
    std::vector<double> bad{0.5, 1.0};
    CHECK_THROWS_AS(check_scaling_inequality(Space::lp(2, 4), {}, bad), DomainError);
  }

  TEST_CASE("probes are deterministic") {
    ProbeSampler sampler;
    sampler.samples = 300;
    sampler.seed = 42;
    auto a = check_translation_invariance(Space::omega_sum(6), sampler);
    auto b = check_translation_invariance(Space::omega_sum(6), sampler);
    CHECK(a.worst_violation == b.worst_violation);
  }
}

TEST_SUITE("points") {
  TEST_CASE("parsing decides rationality") {
    CHECK(Point::parse("1/3").is_rational());
    CHECK(Point::parse("2/4").exact_value()->den == 2);
    CHECK(Point::parse("1").is_rational());
    CHECK_FALSE(Point::parse("0.5").is_rational());
    CHECK_FALSE(Point::parse("sqrt(2)/2").is_rational());
    CHECK(Point::parse("sqrt(2)/2").value() == doctest::Approx(std::sqrt(2.0) / 2));
  }

  TEST_CASE("exact arithmetic") {
    Point a = Point::rational(1, 3), b = Point::rational(1, 2);
    CHECK(midpoint(a, b).exact_value()->to_string() == "5/12");
    CHECK(lerp(Point::rational(0, 1), Point::rational(1, 1), 3, 8).exact_value()->to_string() == "3/8");
    CHECK(shift_dyadic(a, -1, 3).exact_value()->to_string() == "5/24");
    CHECK(width(a, b) == doctest::Approx(1.0 / 6));
    CHECK_FALSE(midpoint(a, Point::generic(0.7)).is_rational());
  }
}
