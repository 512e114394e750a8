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

#include <vector>

#include "metrivec/errors.hpp"
#include "metrivec/partitions.hpp"
#include "metrivec/random.hpp"

using namespace metrivec;

TEST_SUITE("partitions") {
  TEST_CASE("construction checks ordering") {
    CHECK_THROWS_AS(Partition::from_values(std::vector<double>{0.0}), DomainError);
    CHECK_THROWS_AS(Partition::from_values(std::vector<double>{0.0, 0.5, 0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(Partition::from_values(std::vector<double>{0.0, 0.7, 0.3, 1.0}), DomainError);
    auto p = Partition::from_values(std::vector<double>{0.0, 0.25, 1.0});
    CHECK(p.intervals() == 2);
    CHECK(mesh(p) == 0.75);
  }

  TEST_CASE("tags must lie in their interval") {
    auto p = Partition::from_values(std::vector<double>{0.0, 0.5, 1.0});
    CHECK_THROWS_AS(TaggedPartition(p, {Point::generic(0.6), Point::generic(0.7)}), InvariantError);
    CHECK_THROWS_AS(TaggedPartition(p, {Point::generic(0.1)}), InvariantError);
    CHECK_NOTHROW(TaggedPartition(p, {Point::generic(0.5), Point::generic(0.5)}));
  }

  TEST_CASE("uniform points are exact for integer ends") {
    auto p = uniform_points(0, 1, 6);
    for (const auto& pt : p.points()) CHECK(pt.is_rational());
    CHECK(p.left(2).exact_value()->to_string() == "1/3");
    CHECK(mesh(p) == doctest::Approx(1.0 / 6));
    CHECK_FALSE(uniform_points(0.0, 0.3, 3).left(1).is_rational());
  }

  TEST_CASE("tag rules") {
    auto p = uniform_points(0, 1, 4);
    auto l = with_tags(p, TagRule::left);
    auto r = with_tags(p, TagRule::right);
    auto m = with_tags(p, TagRule::midpoint);
    auto s = with_tags(p, TagRule::seeded_random, 9);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(l.tags()[i].value() == p.left(i).value());
      CHECK(r.tags()[i].value() == p.right(i).value());
      CHECK(m.tags()[i].value() == doctest::Approx((2.0 * i + 1) / 8));
      CHECK_FALSE(s.tags()[i].is_rational());
    }
    CHECK(with_tags(p, TagRule::seeded_random, 9).tags()[2].value() == s.tags()[2].value());
  }

  TEST_CASE("refinement") {
    auto coarse = uniform_points(0, 1, 4);
    CHECK(refines(uniform_points(0, 1, 8), coarse));
    CHECK_FALSE(refines(uniform_points(0, 1, 6), coarse));
    CHECK_THROWS_AS(refines(uniform_points(0, 2, 8), coarse), DomainError);
  }

  TEST_CASE("merge keeps tags of coinciding intervals") {
    auto d = with_tags(Partition::from_values(std::vector<double>{0.0, 0.25, 0.5, 1.0}), TagRule::left);
    auto extra = Partition::from_values(std::vector<double>{0.0, 0.75, 1.0});
    auto m = merge(d, extra);
    REQUIRE(m.intervals() == 4);
    CHECK(refines(m.partition(), d.partition()));
    CHECK(refines(m.partition(), extra));
    CHECK(m.tags()[0].value() == 0.0);
    CHECK(m.tags()[1].value() == 0.25);
    CHECK(m.tags()[2].value() == 0.625);
    CHECK(m.tags()[3].value() == 0.875);
    auto seeded = merge(d, extra, 3);
    CHECK(seeded.tags()[1].value() == 0.25);
    CHECK(seeded.tags()[2].value() >= 0.5);
    CHECK(seeded.tags()[2].value() <= 0.75);
  }

  TEST_CASE("merge is a refinement of both inputs on random inputs") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> a{0.0}, b{0.0};
      for (int i = 1; i < 6; ++i) a.push_back(i / 6.0 + rng.uniform(-0.05, 0.05));
      for (int i = 1; i < 4; ++i) b.push_back(i / 4.0 + rng.uniform(-0.1, 0.1));
      a.push_back(1.0);
      b.push_back(1.0);
      auto d = with_tags(Partition::from_values(a), TagRule::seeded_random, trial);
      auto m = merge(d, Partition::from_values(b));
      CHECK(refines(m.partition(), d.partition()));
      CHECK(refines(m.partition(), Partition::from_values(b)));
      CHECK(mesh(m) <= mesh(d));
    }
  }

  TEST_CASE("retag enforces containment") {
    auto d = with_tags(uniform_points(0, 1, 2), TagRule::left);
    auto moved = retag(d, [](const Point& l, const Point& r, std::size_t) { return midpoint(l, r); });
    CHECK(moved.tags()[1].value() == 0.75);
    CHECK_THROWS_AS(retag(d, [](const Point&, const Point& r, std::size_t) { return Point::generic(r.value() + 1); }),
                    InvariantError);
  }
}
