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

#include "metrivec/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "metrivec/errors.hpp"
#include "metrivec/random.hpp"

namespace metrivec {

namespace {

// Irrational-looking offset fraction for generic witnesses.
constexpr double kGenericFraction = 0.70710678118654752;

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

// A generic point within `radius` of t inside [0, 1].
Point generic_near(const Point& t, double radius) {
  double step = radius * kGenericFraction;
  double v = t.value() + step;
  if (!in_unit(v)) v = t.value() - step;
  return Point::generic(v);
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t n = 0;
  for (char c : text) {
    if (c < '0' || c > '9' || n > 100000000) throw UsageError("bad " + std::string(what) + " in gallery id");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  if (text.empty() || n == 0) throw UsageError("bad " + std::string(what) + " in gallery id");
  return n;
}

struct PairHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& p) const {
    return std::hash<std::int64_t>()(p.first) * 1000003u ^ std::hash<std::int64_t>()(p.second);
  }
};

}  // namespace

std::vector<Rational> rational_enumeration(std::size_t n_max) {
  std::vector<Rational> out;
  out.reserve(n_max);
  if (n_max >= 1) out.push_back({0, 1});
  if (n_max >= 2) out.push_back({1, 1});
  for (std::int64_t q = 2; out.size() < n_max; ++q) {
    for (std::int64_t p = 1; p < q && out.size() < n_max; ++p) {
      if (std::gcd(p, q) == 1) out.push_back({p, q});
    }
  }
  return out;
}

GalleryFunction rational_enumeration_function(std::size_t n_max, const Space& codomain) {
  if (codomain.repr() != Repr::sparse && !codomain.is_sequence()) {
    throw CapabilityError("rationals need a sequence codomain, got " + codomain.to_string());
  }
  if (codomain.is_sequence() && codomain.dimension() < n_max) {
    throw CapabilityError("rationals:" + std::to_string(n_max) + " needs M >= " + std::to_string(n_max) + ", got " +
                          codomain.to_string());
  }
  auto seq = rational_enumeration(n_max);
  auto index = std::make_shared<std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::size_t, PairHash>>();
  auto sorted = std::make_shared<std::vector<std::pair<double, std::size_t>>>();
  for (std::size_t n = 0; n < seq.size(); ++n) {
    (*index)[{seq[n].num, seq[n].den}] = n + 1;
    sorted->emplace_back(seq[n].value(), n + 1);
  }
  std::sort(sorted->begin(), sorted->end());
  double gap = 0.0;
  for (std::size_t i = 1; i < sorted->size(); ++i) gap = std::max(gap, (*sorted)[i].first - (*sorted)[i - 1].first);

  auto lookup = [index](const Point& t) -> std::size_t {
    if (!t.is_rational()) return 0;
    auto it = index->find({t.exact_value()->num, t.exact_value()->den});
    return it == index->end() ? 0 : it->second;
  };
  auto rationals = std::make_shared<std::vector<Rational>>(seq);
  Integrand f("rationals:" + std::to_string(n_max), codomain, [lookup, codomain](const Point& t) {
    std::size_t n = lookup(t);
    return n == 0 ? codomain.zero() : codomain.basis(n);
  });
  f.with_witness([lookup, sorted, rationals, codomain, f](const Point& t, double radius,
                                                        double sep) -> std::optional<Point> {
    const std::size_t self = lookup(t);
    const Vector ft = f(t);
    if (self != 0) {
      Point v = generic_near(t, radius);
      if (codomain.metric(ft, codomain.zero()) < sep) return std::nullopt;
      return v;
    }
    // most separated enumerated rational within the radius, nearest on ties
    auto lo = std::lower_bound(sorted->begin(), sorted->end(), std::make_pair(t.value() - radius, std::size_t{0}));
    std::optional<Point> best;
    double best_sep = -1.0, best_dist = 0.0;
    for (auto it = lo; it != sorted->end() && it->first <= t.value() + radius; ++it) {
      double dist = std::abs(it->first - t.value());
      if (dist > radius) continue;
      double d = codomain.metric(ft, codomain.basis(it->second));
      if (d > best_sep || (d == best_sep && dist < best_dist)) {
        best_sep = d;
        best_dist = dist;
        best = Point::exact((*rationals)[it->second - 1]);
      }
    }
    if (!best || best_sep < sep) return std::nullopt;
    return best;
  });
  double bound = 0.0;
  if (codomain.repr() == Repr::sparse) {
    bound = codomain.magnitude(codomain.basis(1));
  } else {
    for (std::size_t n = 1; n <= n_max; ++n) bound = std::max(bound, codomain.magnitude(codomain.basis(n)));
  }
  f.with_bound(bound);
  GalleryFunction g{f, f.id(), "discontinuous at r_1..r_" + std::to_string(n_max) + " (enumerated rationals)",
                    {{"N_max", static_cast<double>(n_max)}, {"M", static_cast<double>(codomain.dimension())}},
                    gap, {}, {}};
  return g;
}

GalleryFunction binary_digit_function(std::size_t k_max, const Space& codomain) {
  if (codomain.repr() == Repr::sparse) {
    throw CapabilityError("digits need a coordinate codomain, got " + codomain.to_string());
  }
  if (codomain.dimension() < k_max) {
    throw CapabilityError("digits:" + std::to_string(k_max) + " needs dimension >= " + std::to_string(k_max) +
                          ", got " + codomain.to_string());
  }
  auto digits = [k_max](const Point& t) {
    std::vector<double> c(k_max, 0.0);
    if (!in_unit(t.value())) throw DomainError("digit function is defined on [0, 1], got " + t.to_string());
    if (t.value() == 1.0) return c;
    if (const auto& q = t.exact_value()) {
      __int128 rem = q->num;
      const __int128 den = q->den;
      for (std::size_t k = 0; k < k_max && rem != 0; ++k) {
        rem *= 2;
        if (rem >= den) {
          c[k] = 1.0;
          rem -= den;
        }
      }
    } else {
      double x = t.value();
      for (std::size_t k = 0; k < k_max && x != 0.0; ++k) {
        x *= 2;
        if (x >= 1.0) {
          c[k] = 1.0;
          x -= 1.0;
        }
      }
    }
    return c;
  };
  Integrand f("digits:" + std::to_string(k_max), codomain,
              [digits, codomain](const Point& t) { return codomain.from_coords(digits(t)); });
  f.with_witness([digits, k_max, codomain, f](const Point& t, double radius, double sep) -> std::optional<Point> {
    if (!(radius > 0)) return std::nullopt;
    int k = std::max(1, static_cast<int>(std::ceil(-std::log2(radius))));
    while (k > 1 && std::ldexp(1.0, -(k - 1)) <= radius) --k;
    while (std::ldexp(1.0, -k) > radius) ++k;
    if (static_cast<std::size_t>(k) > k_max) return std::nullopt;
    auto c = digits(t);
    int sign = c[k - 1] == 0.0 ? +1 : -1;
    Point v = shift_dyadic(t, sign, k);
    if (!in_unit(v.value())) v = shift_dyadic(t, -sign, k);
    if (!in_unit(v.value())) return std::nullopt;
    if (codomain.metric(f(t), f(v)) < sep) return std::nullopt;
    return v;
  });
  f.with_bound(codomain.magnitude(codomain.from_coords(std::vector<double>(k_max, 1.0))));
  // integrability into linf is disputed: the digit-flip adversary separates
  // sums at every mesh. Refuting reports carry the flag, nothing more.
  if (codomain.kind() == SpaceKind::linf) f.with_refutation_note(std::string(digits_linf_note));
  return GalleryFunction{f, f.id(), "discontinuous at dyadic rationals of level <= " + std::to_string(k_max),
                         {{"K", static_cast<double>(k_max)}, {"M", static_cast<double>(codomain.dimension())}},
                         std::nullopt, {}, {}};
}

GalleryFunction rational_indicator(const Space& codomain) {
  const Vector e1 = codomain.basis(1);
  Integrand f("ratind", codomain,
              [codomain, e1](const Point& t) { return t.is_rational() ? e1 : codomain.zero(); });
  f.with_witness([codomain, e1](const Point& t, double radius, double sep) -> std::optional<Point> {
    if (!(radius > 0) || codomain.magnitude(e1) < sep) return std::nullopt;
    if (t.is_rational()) return generic_near(t, radius);
    const double q = std::ceil(1.0 / radius) + 1.0;
    if (q > 0x1.0p40) return std::nullopt;
    const double p = std::round(t.value() * q);
    return Point::rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
  });
  f.with_bound(codomain.magnitude(e1));
  return GalleryFunction{f, "ratind", "discontinuous everywhere", {}, std::nullopt, {}, {}};
}

namespace {

struct Coordinate {
  double (*value)(double);
  double (*primitive)(double);
  double (*slope)(double);
  double bound;
};

std::vector<Coordinate> smooth_coordinates(std::string_view name) {
  const Coordinate t{[](double x) { return x; }, [](double x) { return x * x / 2; }, [](double) { return 1.0; }, 1.0};
  const Coordinate t2{[](double x) { return x * x; }, [](double x) { return x * x * x / 3; },
                      [](double x) { return 2 * x; }, 1.0};
  const Coordinate sin{[](double x) { return std::sin(x); }, [](double x) { return 1 - std::cos(x); },
                       [](double x) { return std::cos(x); }, std::sin(1.0)};
  const Coordinate cos{[](double x) { return std::cos(x); }, [](double x) { return std::sin(x); },
                       [](double x) { return -std::sin(x); }, 1.0};
  const Coordinate exp{[](double x) { return std::exp(-x); }, [](double x) { return 1 - std::exp(-x); },
                       [](double x) { return -std::exp(-x); }, 1.0};
  const Coordinate one{[](double) { return 1.0; }, [](double x) { return x; }, [](double) { return 0.0; }, 1.0};
  const Coordinate half{[](double) { return -0.5; }, [](double x) { return -0.5 * x; }, [](double) { return 0.0; },
                        0.5};
  if (name == "linear") return {t};
  if (name == "poly12") return {t, t2};
  if (name == "trig") return {sin, cos};
  if (name == "mixed") return {t, t2, sin, exp};
  if (name == "const") return {one, half};
  throw UsageError("unknown smooth function '" + std::string(name) + "'; known: linear, poly12, trig, mixed, const");
}

}  // namespace

std::vector<std::string> smooth_names() { return {"linear", "poly12", "trig", "mixed", "const"}; }

GalleryFunction smooth_function(std::string_view name, std::optional<Space> codomain) {
  auto coords = smooth_coordinates(name);
  Space space = codomain ? *codomain : Space::euclidean(coords.size());
  auto map = [coords, space](auto pick) {
    return [coords, space, pick](const Point& t) {
      std::vector<double> v;
      v.reserve(coords.size());
      for (const auto& c : coords) v.push_back(pick(c)(t.value()));
      return space.from_coords(std::move(v));
    };
  };
  Integrand f("smooth:" + std::string(name), space, map([](const Coordinate& c) { return c.value; }));
  std::vector<double> bounds;
  for (const auto& c : coords) bounds.push_back(c.bound);
  f.with_bound(space.magnitude(space.from_coords(bounds)));
  return GalleryFunction{f,
                         f.id(),
                         "continuous",
                         {},
                         std::nullopt,
                         map([](const Coordinate& c) { return c.primitive; }),
                         map([](const Coordinate& c) { return c.slope; })};
}

std::vector<GalleryFunction> smooth_calibration_set(std::optional<Space> codomain) {
  std::vector<GalleryFunction> out;
  for (const auto& name : smooth_names()) out.push_back(smooth_function(name, codomain));
  return out;
}

GalleryFunction make_gallery(std::string_view id, const Space& codomain) {
  auto colon = id.find(':');
  std::string_view head = id.substr(0, colon);
  std::string_view tail = colon == std::string_view::npos ? std::string_view{} : id.substr(colon + 1);
  if (head == "rationals") return rational_enumeration_function(tail.empty() ? 1000 : parse_count(tail, "N_max"), codomain);
  if (head == "digits") return binary_digit_function(tail.empty() ? 24 : parse_count(tail, "K"), codomain);
  if (head == "ratind" && tail.empty()) return rational_indicator(codomain);
  if (head == "smooth" && !tail.empty()) return smooth_function(tail, codomain);
  throw UsageError("unknown function id '" + std::string(id) + "'; expected " + std::string(gallery_grammar));
}

AdversaryResult adversary_partitions(const GalleryFunction& g, double r, std::size_t n,
                                     const OscillationSampler& sampler) {
  const Integrand& f = g.f;
  if (!(r > 0)) throw DomainError("adversary needs r > 0");
  if (!f.has_witness()) throw CapabilityError(g.id + " has no discontinuity witness oracle");
  Partition p = uniform_points(0.0, 1.0, n);
  std::vector<Point> first, second;
  std::vector<std::size_t> meeting;
  for (std::size_t i = 0; i < n; ++i) {
    Point u = midpoint(p.left(i), p.right(i));
    OscillationSampler s = sampler;
    s.seed = derive_seed(sampler.seed, i);
    auto osc = oscillation_on_interval(f, p.left(i), p.right(i), s);
    if (osc.estimate < r) {
      first.push_back(u);
      second.push_back(u);
      continue;
    }
    auto v = f.witness()(u, p.width(i) / 2, r / 2);
    if (!v || v->value() < p.left(i).value() || v->value() > p.right(i).value()) {
      throw ConstructionError("no witness with separation " + Point::generic(r / 2).to_string() + " in interval [" +
                              p.left(i).to_string() + ", " + p.right(i).to_string() + "]");
    }
    meeting.push_back(i);
    first.push_back(u);
    second.push_back(*v);
  }
  TaggedPartition d1(p, std::move(first));
  TaggedPartition d2(p, std::move(second));
  auto measure = discontinuity_measure(f, 0.0, 1.0, r, n, sampler);
  double achieved = f.space().metric(riemann_sum(f, d1), riemann_sum(f, d2));
  double floor = r * measure.lower / 4;
  return AdversaryResult{g.id,
                         f.space().to_string(),
                         r,
                         n,
                         std::move(d1),
                         std::move(d2),
                         std::move(meeting),
                         std::move(measure),
                         achieved,
                         floor,
                         achieved >= floor,
                         f.space().hypothesis_annotations()};
}

CoordinateContinuityReport coordinate_continuity_probe(const Integrand& f, const Point& t, std::size_t coordinates,
                                                       std::span<const double> deltas,
                                                       const OscillationSampler& sampler,
                                                       std::optional<Space> product) {
  if (f.space().repr() == Repr::sparse && !product) {
    throw CapabilityError("coordinate probe on " + f.space().to_string() + " needs an explicit product space");
  }
  Space prod = product ? *product : Space::omega_sup(std::max<std::size_t>(f.space().dimension(), coordinates));
  if (!prod.is_product()) throw CapabilityError("coordinate probe needs a product space, got " + prod.to_string());
  if (coordinates == 0 || coordinates > prod.dimension()) {
    throw DomainError("coordinate count must lie in 1.." + std::to_string(prod.dimension()));
  }
  if (deltas.empty()) throw DomainError("coordinate probe needs a delta schedule");
  std::vector<double> radii(deltas.begin(), deltas.end());
  std::sort(radii.begin(), radii.end());

  CoordinateContinuityReport rep;
  rep.t = t.value();
  rep.coordinates = coordinates;
  rep.deltas.assign(radii.rbegin(), radii.rend());
  rep.product_space = prod.to_string();
  rep.tail = prod.kind() == SpaceKind::omega_sup ? 1.0 / static_cast<double>(coordinates + 1)
                                                 : std::ldexp(1.0, -static_cast<int>(coordinates));

  auto as_product = [&](const Vector& v) {
    std::size_t m = v.repr() == Repr::sparse ? prod.dimension() : std::min(v.coords().size(), prod.dimension());
    std::vector<double> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = v.coordinate(i);
    return prod.from_coords(std::move(c));
  };

  std::vector<Vector> values;
  std::vector<double> coord_best(coordinates, 0.0);
  double prod_best = 0.0;
  auto add = [&](const Point& p) {
    Vector v = f(p);
    Vector pv = as_product(v);
    for (const auto& w : values) {
      prod_best = std::max(prod_best, prod.metric(w, pv));
      for (std::size_t i = 0; i < coordinates; ++i) {
        coord_best[i] = std::max(coord_best[i], std::abs(w.coordinate(i) - pv.coordinate(i)));
      }
    }
    values.push_back(std::move(pv));
  };

  add(t);
  std::vector<double> per_window;
  std::uint64_t stream = 0;
  for (double delta : radii) {
    Point l = t.value() - delta <= 0.0 ? Point::rational(0, 1) : Point::generic(t.value() - delta);
    Point r = t.value() + delta >= 1.0 ? Point::rational(1, 1) : Point::generic(t.value() + delta);
    if (t.is_rational()) {
      // keep exact windows around exact points (dyadic radii)
      int e = 0;
      if (std::frexp(delta, &e) == 0.5) {
        if (t.value() - delta > 0.0) l = shift_dyadic(t, -1, 1 - e);
        if (t.value() + delta < 1.0) r = shift_dyadic(t, +1, 1 - e);
      }
    }
    std::vector<Point> pts{l, r};
    if (sampler.witness_assisted && f.has_witness()) {
      if (auto w = f.witness()(t, delta, 0.0); w && w->value() >= l.value() && w->value() <= r.value()) {
        pts.push_back(*w);
      }
    }
    Rng rng(derive_seed(sampler.seed, stream++));
    for (std::size_t k = 0; k < sampler.samples; ++k) pts.push_back(Point::generic(rng.uniform(l.value(), r.value())));
    for (const auto& p : pts) add(p);
    if (per_window.empty()) rep.coordinate_estimates = coord_best;
    per_window.push_back(prod_best);
  }
  rep.product_estimates.assign(per_window.rbegin(), per_window.rend());
  constexpr double kZero = 1e-12;
  rep.coordinatewise_continuous =
      std::all_of(rep.coordinate_estimates.begin(), rep.coordinate_estimates.end(), [](double x) { return x <= kZero; });
  rep.product_to_zero = per_window.front() <= rep.tail + kZero;
  rep.agree = rep.coordinatewise_continuous == rep.product_to_zero;
  return rep;
}

}  // namespace metrivec
