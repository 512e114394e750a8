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

#include "metrivec/oscillation.hpp"

#include <algorithm>
#include <cmath>

#include "metrivec/errors.hpp"
#include "metrivec/random.hpp"

namespace metrivec {

namespace {

Point domain_point(double x) {
  if (std::isfinite(x) && std::floor(x) == x && std::abs(x) < 0x1.0p31) {
    return Point::rational(static_cast<std::int64_t>(x), 1);
  }
  return Point::generic(x);
}

// t + sign * delta, exact when t is exact and delta is a power of two.
Point offset(const Point& t, double delta, int sign) {
  int e = 0;
  double m = std::frexp(delta, &e);
  if (t.is_rational() && m == 0.5 && 1 - e >= 0) return shift_dyadic(t, sign, 1 - e);
  return Point::generic(t.value() + sign * delta);
}

// Running max of pairwise distances over a growing sample set.
class PairwiseMax {
 public:
  explicit PairwiseMax(const Integrand& f) : f_(f) {}

  void add(const Point& p) {
    Vector v = f_(p);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      double d = f_.space().metric(values_[i], v);
      if (d > best_) {
        best_ = d;
        pair_ = {points_[i], p};
      }
    }
    points_.push_back(p);
    values_.push_back(std::move(v));
  }

  double best() const { return best_; }
  std::size_t size() const { return points_.size(); }
  const std::optional<std::pair<Point, Point>>& pair() const { return pair_; }

 private:
  const Integrand& f_;
  std::vector<Point> points_;
  std::vector<Vector> values_;
  double best_ = 0.0;
  std::optional<std::pair<Point, Point>> pair_;
};

// Sample points for a window around t, excluding the ones already taken.
std::vector<Point> around(const Integrand& f, const Point& t, const Point& l, const Point& r, double radius,
                          const OscillationSampler& sampler, std::uint64_t seed) {
  std::vector<Point> pts{l, r};
  if (sampler.witness_assisted && f.has_witness()) {
    if (auto w = f.witness()(t, radius, 0.0); w && w->value() >= l.value() && w->value() <= r.value()) {
      pts.push_back(*w);
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < sampler.samples; ++k) {
    pts.push_back(Point::generic(std::clamp(rng.uniform(l.value(), r.value()), l.value(), r.value())));
  }
  return pts;
}

OscillationProfile base_profile(const Integrand& f, std::string target, const OscillationSampler& sampler) {
  OscillationProfile prof;
  prof.target = std::move(target);
  prof.integrand = f.id();
  prof.space = f.space().to_string();
  prof.seed = sampler.seed;
  prof.witness_assisted = sampler.witness_assisted;
  return prof;
}

struct PointWindows {
  std::vector<double> estimates;  // smallest window first
  std::size_t samples = 0;
  std::optional<std::pair<Point, Point>> witness;  // of the smallest window
};

PointWindows point_windows(const Integrand& f, const Point& t, std::vector<double> radii_small_first,
                           const OscillationSampler& sampler, double a, double b) {
  PointWindows out;
  PairwiseMax acc(f);
  acc.add(t);
  std::uint64_t stream = 0;
  for (double delta : radii_small_first) {
    Point l = t.value() - delta <= a ? domain_point(a) : offset(t, delta, -1);
    Point r = t.value() + delta >= b ? domain_point(b) : offset(t, delta, +1);
    for (const Point& p : around(f, t, l, r, delta, sampler, derive_seed(sampler.seed, stream++))) acc.add(p);
    out.estimates.push_back(acc.best());
    if (out.estimates.size() == 1) out.witness = acc.pair();
  }
  out.samples = acc.size();
  return out;
}

}  // namespace

double interval_measure(std::span<const std::pair<double, double>> intervals) {
  std::vector<std::pair<double, double>> v(intervals.begin(), intervals.end());
  for (const auto& [l, r] : v) {
    if (!std::isfinite(l) || !std::isfinite(r) || l > r) throw DomainError("malformed interval in measure");
  }
  std::sort(v.begin(), v.end());
  double total = 0.0;
  std::size_t i = 0;
  while (i < v.size()) {
    double l = v[i].first;
    double r = v[i].second;
    for (++i; i < v.size() && v[i].first <= r; ++i) r = std::max(r, v[i].second);
    total += r - l;
  }
  return total;
}

std::vector<Point> window_points(const Integrand& f, const Point& l, const Point& r, const OscillationSampler& sampler,
                                 std::uint64_t seed) {
  if (l.value() > r.value()) throw DomainError("window needs l <= r");
  Point c = midpoint(l, r);
  auto pts = around(f, c, l, r, width(l, r) / 2, sampler, seed);
  pts.insert(pts.begin() + 2, c);
  return pts;
}

OscillationProfile oscillation_on_interval(const Integrand& f, const Point& l, const Point& r,
                                           const OscillationSampler& sampler) {
  auto prof = base_profile(f, "interval", sampler);
  prof.location = {l.value(), r.value()};
  PairwiseMax acc(f);
  for (const Point& p : window_points(f, l, r, sampler, sampler.seed)) acc.add(p);
  prof.estimate = acc.best();
  prof.samples = acc.size();
  prof.witness = acc.pair();
  return prof;
}

OscillationProfile oscillation_sum(const Integrand& f, const Partition& p, const OscillationSampler& sampler) {
  auto prof = base_profile(f, "partition", sampler);
  prof.location = p.values();
  for (std::size_t i = 0; i < p.intervals(); ++i) {
    PairwiseMax acc(f);
    for (const Point& q : window_points(f, p.left(i), p.right(i), sampler, derive_seed(sampler.seed, i))) acc.add(q);
    prof.window_estimates.push_back(acc.best());
    prof.estimate += acc.best() * p.width(i);
    prof.samples += acc.size();
  }
  return prof;
}

std::vector<double> default_delta_schedule(double a, double b) {
  std::vector<double> out;
  for (int k = 3; k <= 16; ++k) out.push_back(std::ldexp(b - a, -k));
  return out;
}

OscillationProfile pointwise_oscillation(const Integrand& f, const Point& t, std::span<const double> deltas,
                                         const OscillationSampler& sampler, double a, double b) {
  if (t.value() < a || t.value() > b) throw DomainError("point " + t.to_string() + " outside the domain");
  if (deltas.empty()) throw DomainError("pointwise oscillation needs a delta schedule");
  std::vector<double> sorted(deltas.begin(), deltas.end());
  for (double d : sorted) {
    if (!(d > 0)) throw DomainError("window radii must be positive");
  }
  std::sort(sorted.begin(), sorted.end());
  auto prof = base_profile(f, "point", sampler);
  prof.location = {t.value()};
  auto w = point_windows(f, t, sorted, sampler, a, b);
  prof.schedule.assign(sorted.rbegin(), sorted.rend());
  prof.window_estimates.assign(w.estimates.rbegin(), w.estimates.rend());
  prof.estimate = w.estimates.front();
  prof.samples = w.samples;
  prof.witness = w.witness;
  prof.monotone = std::is_sorted(prof.window_estimates.rbegin(), prof.window_estimates.rend());
  return prof;
}

CriterionReport darboux_probe(const Integrand& f, double a, double b, std::span<const std::size_t> levels, double eps,
                              const OscillationSampler& sampler) {
  if (!(eps > 0)) throw DomainError("darboux probe needs eps > 0");
  if (levels.empty()) throw DomainError("darboux probe needs at least one level");
  CriterionReport rep;
  rep.criterion = "darboux";
  rep.integrand = f.id();
  rep.space = f.space().to_string();
  rep.seed = sampler.seed;
  rep.eps = eps;
  rep.status = "fail";
  double bound = 0.0;
  for (std::size_t n : levels) {
    Partition p = uniform_points(a, b, n);
    OscillationSampler s = sampler;
    s.seed = derive_seed(sampler.seed, n);
    auto prof = oscillation_sum(f, p, s);
    rep.levels.push_back({n, mesh(p), prof.estimate, prof.samples});
    rep.samples += prof.samples;
    bound = rep.levels.size() == 1 ? prof.estimate : std::min(bound, prof.estimate);
    if (prof.estimate < eps) {
      rep.status = "pass";
      bound = prof.estimate;
      break;
    }
  }
  rep.worst = bound;
  rep.annotations = report_annotations(f, rep.status == "fail");
  return rep;
}

std::vector<MeasureEstimate> discontinuity_measures(const Integrand& f, double a, double b, std::span<const double> rs,
                                                    std::size_t grid, const OscillationSampler& sampler) {
  for (double r : rs) {
    if (!(r > 0)) throw DomainError("discontinuity measure needs r > 0");
  }
  if (!(a < b)) throw DomainError("discontinuity measure needs a < b");
  if (grid == 0) throw DomainError("discontinuity measure needs a grid of at least one step");
  const double h = (b - a) / static_cast<double>(grid);
  const auto g = static_cast<std::int64_t>(grid);
  const std::int64_t cells = 2 * g;
  Point pa = domain_point(a);
  Point pb = domain_point(b);
  std::vector<double> points, inner, outer;
  for (std::int64_t j = 0; j <= g; ++j) {
    Point t = lerp(pa, pb, j, g);
    OscillationSampler s = sampler;
    s.seed = derive_seed(sampler.seed, static_cast<std::uint64_t>(j));
    auto w = point_windows(f, t, {h / 4, h}, s, a, b);
    points.push_back(t.value());
    inner.push_back(w.estimates[0]);
    outer.push_back(w.estimates[1]);
  }
  std::vector<MeasureEstimate> out;
  for (double r : rs) {
    MeasureEstimate est;
    est.r = r;
    est.grid = grid;
    est.step = h;
    est.points = points;
    est.estimates = outer;
    std::vector<char> clean_cover(cells, 0), core_cover(cells, 0);
    for (std::int64_t j = 0; j <= g; ++j) {
      const bool confirmed = inner[j] >= r;
      const bool clean = outer[j] < r;
      est.classes.push_back(confirmed ? "confirmed" : clean ? "clean" : "unresolved");
      if (confirmed) ++est.confirmed;
      if (clean) ++est.clean;
      // half-cell c spans [a + c h/2, a + (c+1) h/2]; grid point j sits at the left end of cell 2j
      for (std::int64_t c = std::max<std::int64_t>(2 * j - 2, 0); c <= std::min(2 * j + 1, cells - 1); ++c) {
        if (clean) clean_cover[c] = 1;
        if (confirmed && (c == 2 * j - 1 || c == 2 * j)) core_cover[c] = 1;
      }
    }
    std::size_t up = 0, low = 0;
    for (std::int64_t c = 0; c < cells; ++c) {
      if (!clean_cover[c]) {
        ++up;
        if (core_cover[c]) ++low;
      }
    }
    est.upper = static_cast<double>(up) * (b - a) / static_cast<double>(cells);
    est.lower = static_cast<double>(low) * (b - a) / static_cast<double>(cells);
    out.push_back(std::move(est));
  }
  return out;
}

MeasureEstimate discontinuity_measure(const Integrand& f, double a, double b, double r, std::size_t grid,
                                      const OscillationSampler& sampler) {
  const double rs[] = {r};
  return discontinuity_measures(f, a, b, rs, grid, sampler).front();
}

}  // namespace metrivec
