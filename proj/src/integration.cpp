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

#include "metrivec/integration.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "metrivec/errors.hpp"
#include "metrivec/random.hpp"

namespace metrivec {

namespace {

struct Worst {
  double value = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
};

Worst worst_pair(const Space& space, const std::vector<Vector>& sums) {
  Worst w;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    for (std::size_t j = i + 1; j < sums.size(); ++j) {
      double d = space.metric(sums[i], sums[j]);
      if (d > w.value) w = {d, i, j};
    }
  }
  return w;
}

std::string status_for(double worst, const std::optional<double>& eps) {
  if (!eps) return "observed";
  return worst >= *eps ? "refuted-with-witness" : "no-violation-found";
}

CriterionReport pairwise_report(const Integrand& f, std::string criterion, const std::vector<TaggedPartition>& tps,
                                const std::optional<double>& eps, std::uint64_t seed) {
  CriterionReport rep;
  rep.criterion = std::move(criterion);
  rep.integrand = f.id();
  rep.space = f.space().to_string();
  rep.samples = tps.size();
  rep.seed = seed;
  rep.eps = eps;
  std::vector<Vector> sums;
  sums.reserve(tps.size());
  for (const auto& tp : tps) sums.push_back(riemann_sum(f, tp));
  Worst w = worst_pair(f.space(), sums);
  rep.worst = w.value;
  if (tps.size() >= 2) rep.witness.emplace(tps[w.i], tps[w.j]);
  rep.status = status_for(rep.worst, eps);
  rep.annotations = report_annotations(f, rep.status == "refuted-with-witness");
  return rep;
}

// Generic point strictly inside (l, r), or nothing when the interval is too
// narrow to hold one.
std::optional<Point> random_inner(Rng& rng, double l, double r) {
  double x = rng.uniform(l, r);
  if (!(x > l && x < r)) return std::nullopt;
  return Point::generic(x);
}

TaggedPartition random_tags(const Partition& p, Rng& rng) { return with_tags(p, TagRule::seeded_random, rng.next()); }

}  // namespace

std::vector<std::size_t> geometric_levels(std::size_t coarsest, std::size_t finest) {
  if (coarsest == 0 || finest < coarsest) throw DomainError("level schedule needs 1 <= coarsest <= finest");
  std::vector<std::size_t> out;
  for (std::size_t n = coarsest; n <= finest; n *= 2) out.push_back(n);
  return out;
}

std::vector<std::size_t> default_levels() { return geometric_levels(8, 16384); }

Vector riemann_sum(const Integrand& f, const TaggedPartition& p) {
  const Space& s = f.space();
  Vector acc = s.zero();
  const auto& part = p.partition();
  auto tags = p.tags();
  for (std::size_t i = 0; i < p.intervals(); ++i) acc = s.add(acc, s.scale(part.width(i), f(tags[i])));
  return acc;
}

PartitionPair adversarial_taggings(const Integrand& f, const Partition& p) {
  if (!f.has_witness()) throw CapabilityError("integrand " + f.id() + " has no discontinuity witness oracle");
  const Space& s = f.space();
  std::vector<Point> first, second;
  first.reserve(p.intervals());
  second.reserve(p.intervals());
  Vector acc = s.zero();
  for (std::size_t i = 0; i < p.intervals(); ++i) {
    const Point& l = p.left(i);
    const Point& r = p.right(i);
    Point u = midpoint(l, r);
    Point v = u;
    if (auto w = f.witness()(u, p.width(i) / 2, 0.0); w && w->value() >= l.value() && w->value() <= r.value()) {
      v = *w;
    }
    Vector diff = s.scale(p.width(i), s.sub(f(u), f(v)));
    Vector plus = s.add(acc, diff);
    Vector minus = s.sub(acc, diff);
    if (s.magnitude(minus) > s.magnitude(plus)) {
      first.push_back(v);
      second.push_back(u);
      acc = std::move(minus);
    } else {
      first.push_back(u);
      second.push_back(v);
      acc = std::move(plus);
    }
  }
  return {TaggedPartition(p, std::move(first)), TaggedPartition(p, std::move(second))};
}

std::vector<TaggedPartition> sample_taggings(const Integrand& f, const Partition& p, std::size_t count,
                                             std::uint64_t seed) {
  count = std::max<std::size_t>(count, 2);
  std::vector<TaggedPartition> out;
  out.reserve(count + 4);
  out.push_back(with_tags(p, TagRule::midpoint));
  if (f.has_witness()) {
    auto [u, v] = adversarial_taggings(f, p);
    out.push_back(std::move(u));
    out.push_back(std::move(v));
  }
  out.push_back(with_tags(p, TagRule::left));
  out.push_back(with_tags(p, TagRule::right));
  for (std::uint64_t k = 0; out.size() < count; ++k) {
    out.push_back(with_tags(p, TagRule::seeded_random, derive_seed(seed, k)));
  }
  out.resize(count, out.front());
  return out;
}

IntegrationReport integrate(const Integrand& f, double a, double b, const IntegrateConfig& config) {
  if (!(a < b)) throw DomainError("integrate needs a < b");
  if (!(config.eps > 0)) throw DomainError("integrate needs eps > 0");
  if (config.levels.empty()) throw DomainError("integrate needs at least one level");
  IntegrationReport rep;
  rep.integrand = f.id();
  rep.space = f.space().to_string();
  rep.a = a;
  rep.b = b;
  rep.eps = config.eps;
  rep.tag_samples = config.tag_samples;
  rep.seed = config.seed;
  for (std::size_t n : config.levels) {
    Partition p = uniform_points(a, b, n);
    auto tps = sample_taggings(f, p, config.tag_samples, derive_seed(config.seed, n));
    std::vector<Vector> sums;
    sums.reserve(tps.size());
    for (const auto& tp : tps) sums.push_back(riemann_sum(f, tp));
    Worst w = worst_pair(f.space(), sums);
    rep.levels.push_back({n, mesh(p), w.value, tps.size()});
    rep.estimate = sums.front();
    rep.delta = mesh(p);
    if (w.value < config.eps) {
      rep.converged = true;
      break;
    }
  }
  rep.evidence = rep.converged ? "no-violation-found" : "refuted-with-witness";
  rep.annotations = report_annotations(f, !rep.converged);
  return rep;
}

CriterionReport mesh_cauchy_probe(const Integrand& f, double a, double b, double mesh_bound,
                                  const ProbeConfig& config) {
  if (!(a < b)) throw DomainError("mesh probe needs a < b");
  if (!(mesh_bound > 0)) throw DomainError("mesh probe needs a positive mesh bound");
  const double len = b - a;
  auto n0 = static_cast<std::size_t>(std::floor(len / mesh_bound)) + 1;
  std::size_t rule_count = std::max<std::size_t>(2, std::min<std::size_t>(config.samples / 2, 5));
  auto tps = sample_taggings(f, uniform_points(a, b, n0), rule_count, derive_seed(config.seed, 0));

  // jittered partitions: interior points move by at most w/4, so widths stay <= 1.5 w < mesh_bound
  auto n1 = static_cast<std::size_t>(std::floor(1.5 * len / mesh_bound)) + 1;
  const double w = len / static_cast<double>(n1);
  Rng rng(derive_seed(config.seed, 1));
  while (tps.size() < std::max<std::size_t>(config.samples, 2)) {
    std::vector<double> pts{a};
    for (std::size_t i = 1; i < n1; ++i) pts.push_back(a + (static_cast<double>(i) + rng.uniform(-0.25, 0.25)) * w);
    pts.push_back(b);
    tps.push_back(random_tags(Partition::from_values(pts), rng));
  }
  return pairwise_report(f, "mesh-cauchy", tps, config.eps, config.seed);
}

CriterionReport refinement_cauchy_probe(const Integrand& f, const Partition& base, const ProbeConfig& config) {
  std::size_t rule_count = std::max<std::size_t>(2, std::min<std::size_t>(config.samples / 2, 5));
  auto tps = sample_taggings(f, base, rule_count, derive_seed(config.seed, 0));
  Rng rng(derive_seed(config.seed, 1));
  bool first = true;
  while (tps.size() < std::max<std::size_t>(config.samples, 2)) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < base.intervals(); ++i) {
      pts.push_back(base.left(i));
      const double l = base.left(i).value();
      const double r = base.right(i).value();
      std::vector<double> extra;
      for (std::uint64_t k = rng.below(4); k > 0; --k) {
        if (auto x = random_inner(rng, l, r)) extra.push_back(x->value());
      }
      std::sort(extra.begin(), extra.end());
      extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
      for (double x : extra) pts.push_back(Point::generic(x));
    }
    pts.push_back(base.right(base.intervals() - 1));
    Partition fine(std::move(pts));
    if (first && f.has_witness()) {
      auto [u, v] = adversarial_taggings(f, fine);
      tps.push_back(std::move(u));
      tps.push_back(std::move(v));
    } else {
      tps.push_back(random_tags(fine, rng));
    }
    first = false;
  }
  return pairwise_report(f, "refinement-cauchy", tps, config.eps, config.seed);
}

CriterionReport same_points_probe(const Integrand& f, const Partition& points, TagSearch search,
                                  const ProbeConfig& config) {
  std::vector<TaggedPartition> tps{with_tags(points, TagRule::midpoint), with_tags(points, TagRule::left),
                                   with_tags(points, TagRule::right)};
  if (search == TagSearch::adversarial) {
    auto [u, v] = adversarial_taggings(f, points);
    tps.push_back(std::move(u));
    tps.push_back(std::move(v));
  } else {
    for (std::uint64_t k = 0; tps.size() < std::max<std::size_t>(config.samples, 4); ++k) {
      tps.push_back(with_tags(points, TagRule::seeded_random, derive_seed(config.seed, k)));
    }
  }
  return pairwise_report(f, "same-points", tps, config.eps, config.seed);
}

namespace {

using Collection = std::vector<std::pair<Point, Point>>;

// Greedily keeps the intervals whose increment grows d(0, sum).
std::pair<double, Collection> greedy_collection(const Integrand& f, const Collection& candidates) {
  const Space& s = f.space();
  Vector acc = s.zero();
  double best = 0.0;
  Collection chosen;
  for (const auto& [c, d] : candidates) {
    Vector next = s.add(acc, s.sub(f(d), f(c)));
    double m = s.magnitude(next);
    if (m > best) {
      best = m;
      acc = std::move(next);
      chosen.emplace_back(c, d);
    }
  }
  return {best, std::move(chosen)};
}

}  // namespace

double variation_of(const Integrand& f, const std::vector<std::pair<Point, Point>>& collection) {
  const Space& s = f.space();
  Vector acc = s.zero();
  for (const auto& [c, d] : collection) acc = s.add(acc, s.sub(f(d), f(c)));
  return s.magnitude(acc);
}

CriterionReport variation_bound_estimate(const Integrand& f, double a, double b, const VariationConfig& config) {
  if (!(a < b)) throw DomainError("variation estimate needs a < b");
  CriterionReport rep;
  rep.criterion = "variation";
  rep.integrand = f.id();
  rep.space = f.space().to_string();
  rep.seed = config.seed;
  rep.status = "observed";
  rep.annotations = f.space().hypothesis_annotations();

  auto consider = [&](const Collection& candidates) {
    auto [value, chosen] = greedy_collection(f, candidates);
    ++rep.samples;
    if (value > rep.worst) {
      rep.worst = value;
      rep.witness_intervals = std::move(chosen);
    }
  };

  const std::size_t cap = std::max<std::size_t>(config.max_intervals, 1);
  Partition whole = uniform_points(a, b, 1);
  consider({{whole.left(0), whole.right(0)}});

  // dyadic straddles [x - h, x] and [x, x + h] around odd multiples x of 2^-j
  for (std::size_t j = 1; (std::size_t{1} << (j - 1)) <= cap && j < 30; ++j) {
    const std::size_t n = std::size_t{1} << (j + 2);
    Partition grid = uniform_points(a, b, n);
    auto pts = grid.points();
    Collection left, right;
    for (std::size_t m = 1; m < (std::size_t{1} << j); m += 2) {
      left.emplace_back(pts[4 * m - 1], pts[4 * m]);
      right.emplace_back(pts[4 * m], pts[4 * m + 1]);
    }
    consider(left);
    consider(right);
  }

  if (f.has_witness()) {
    for (std::size_t k = 1; k <= cap; k *= 2) {
      Partition grid = uniform_points(a, b, k);
      Collection cands;
      for (std::size_t i = 0; i < k; ++i) {
        Point c = midpoint(grid.left(i), grid.right(i));
        auto v = f.witness()(c, grid.width(i) / 2, 0.0);
        if (!v || v->value() < grid.left(i).value() || v->value() > grid.right(i).value()) continue;
        if (v->value() < c.value()) cands.emplace_back(*v, c);
        else if (v->value() > c.value()) cands.emplace_back(c, *v);
      }
      if (!cands.empty()) consider(cands);
    }
  }

  Rng rng(config.seed);
  for (std::size_t k = 0; k < config.collections; ++k) {
    std::size_t count = 1 + rng.below(cap);
    std::vector<double> xs(2 * count);
    for (double& x : xs) x = rng.uniform(a, b);
    std::sort(xs.begin(), xs.end());
    Collection cands;
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      if (xs[i] < xs[i + 1]) cands.emplace_back(Point::generic(xs[i]), Point::generic(xs[i + 1]));
    }
    consider(cands);
  }
  return rep;
}

}  // namespace metrivec
