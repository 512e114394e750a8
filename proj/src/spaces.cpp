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

#include "metrivec/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "metrivec/errors.hpp"
#include "metrivec/random.hpp"

namespace metrivec {

namespace {

void trim(std::vector<double>& v) {
  while (!v.empty() && v.back() == 0.0) v.pop_back();
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || out == 0) {
    throw UsageError("bad dimension in space '" + std::string(whole) + "'; expected " +
                     std::string(Space::grammar));
  }
  return out;
}

const char* repr_name(Repr r) {
  switch (r) {
    case Repr::dense: return "dense";
    case Repr::sequence: return "sequence";
    case Repr::sparse: return "sparse";
  }
  return "?";
}

}  // namespace

Vector Vector::dense(std::vector<double> coords) {
  Vector v;
  v.repr_ = Repr::dense;
  v.coords_ = std::move(coords);
  return v;
}

Vector Vector::sequence(std::vector<double> head) {
  Vector v;
  v.repr_ = Repr::sequence;
  trim(head);
  v.coords_ = std::move(head);
  return v;
}

Vector Vector::sparse(std::map<std::string, double> entries) {
  Vector v;
  v.repr_ = Repr::sparse;
  std::erase_if(entries, [](const auto& kv) { return kv.second == 0.0; });
  v.entries_ = std::move(entries);
  return v;
}

double Vector::coordinate(std::size_t i) const {
  if (repr_ == Repr::sparse) {
    auto it = entries_.find(std::to_string(i + 1));
    return it == entries_.end() ? 0.0 : it->second;
  }
  return i < coords_.size() ? coords_[i] : 0.0;
}

std::string to_string(ScalingFlag flag) {
  switch (flag) {
    case ScalingFlag::holds: return "holds";
    case ScalingFlag::violated: return "violated";
    case ScalingFlag::unknown: return "unknown";
  }
  return "unknown";
}

Space Space::euclidean(std::size_t n) {
  if (n == 0) throw DomainError("euclidean dimension must be positive");
  return Space(SpaceKind::euclidean, n, 2.0);
}
Space Space::omega_sup(std::size_t m) {
  if (m == 0) throw DomainError("truncation dimension must be positive");
  return Space(SpaceKind::omega_sup, m, 0.0);
}
Space Space::omega_sum(std::size_t m) {
  if (m == 0) throw DomainError("truncation dimension must be positive");
  return Space(SpaceKind::omega_sum, m, 0.0);
}
Space Space::lp(double p, std::size_t m) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("lp exponent must lie in [1, inf)");
  if (m == 0) throw DomainError("truncation dimension must be positive");
  return Space(SpaceKind::lp, m, p);
}
Space Space::linf(std::size_t m) {
  if (m == 0) throw DomainError("truncation dimension must be positive");
  return Space(SpaceKind::linf, m, 0.0);
}
Space Space::l1_gamma() { return Space(SpaceKind::l1_gamma, 0, 1.0); }

Space Space::parse(std::string_view text, std::size_t default_m) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto dim_or_default = [&](std::string_view s) {
    return s.empty() ? default_m : parse_size(s, text);
  };
  if (head == "l1gamma" && rest.empty()) return l1_gamma();
  if (head == "euclidean") {
    if (rest.empty()) throw UsageError("euclidean needs a dimension; expected " + std::string(grammar));
    return euclidean(parse_size(rest, text));
  }
  if (head == "omega-sup") return omega_sup(dim_or_default(rest));
  if (head == "omega-sum") return omega_sum(dim_or_default(rest));
  if (head == "linf") return linf(dim_or_default(rest));
  if (head == "lp") {
    auto c2 = rest.find(':');
    std::string_view ps = rest.substr(0, c2);
    std::string_view ms = c2 == std::string_view::npos ? std::string_view{} : rest.substr(c2 + 1);
    double p = 0.0;
    auto [ptr, ec] = std::from_chars(ps.data(), ps.data() + ps.size(), p);
    if (ps.empty() || ec != std::errc() || ptr != ps.data() + ps.size()) {
      throw UsageError("bad exponent in space '" + std::string(text) + "'; expected " + std::string(grammar));
    }
    try {
      return lp(p, dim_or_default(ms));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown space '" + std::string(text) + "'; expected " + std::string(grammar));
}

std::string Space::to_string() const {
  switch (kind_) {
    case SpaceKind::euclidean: return "euclidean:" + std::to_string(dim_);
    case SpaceKind::omega_sup: return "omega-sup:" + std::to_string(dim_);
    case SpaceKind::omega_sum: return "omega-sum:" + std::to_string(dim_);
    case SpaceKind::lp: return "lp:" + format_real(p_) + ":" + std::to_string(dim_);
    case SpaceKind::linf: return "linf:" + std::to_string(dim_);
    case SpaceKind::l1_gamma: return "l1gamma";
  }
  return "?";
}

Repr Space::repr() const {
  switch (kind_) {
    case SpaceKind::euclidean: return Repr::dense;
    case SpaceKind::l1_gamma: return Repr::sparse;
    default: return Repr::sequence;
  }
}

bool Space::is_sequence() const { return repr() == Repr::sequence; }

std::vector<std::string> Space::hypothesis_annotations() const {
  if (scaling_flag() == ScalingFlag::violated) return {"scaling-inequality-violated"};
  return {};
}

Vector Space::zero() const {
  switch (repr()) {
    case Repr::dense: return Vector::dense(std::vector<double>(dim_, 0.0));
    case Repr::sequence: return Vector::sequence({});
    case Repr::sparse: return Vector::sparse({});
  }
  return {};
}

Vector Space::basis(std::size_t n) const {
  if (n == 0) throw DomainError("basis index starts at 1");
  if (repr() == Repr::sparse) return Vector::sparse({{std::to_string(n), 1.0}});
  if (n > dim_) {
    throw CapabilityError("basis vector e_" + std::to_string(n) + " exceeds dimension of " + to_string());
  }
  std::vector<double> c(repr() == Repr::dense ? dim_ : n, 0.0);
  c[n - 1] = 1.0;
  return repr() == Repr::dense ? Vector::dense(std::move(c)) : Vector::sequence(std::move(c));
}

Vector Space::from_coords(std::vector<double> coords) const {
  switch (repr()) {
    case Repr::dense:
      if (coords.size() > dim_) {
        throw StructuralError(std::to_string(coords.size()) + " coordinates do not fit " + to_string());
      }
      coords.resize(dim_, 0.0);
      return Vector::dense(std::move(coords));
    case Repr::sequence:
      trim(coords);
      if (coords.size() > dim_) {
        throw StructuralError(std::to_string(coords.size()) + " coordinates do not fit " + to_string());
      }
      return Vector::sequence(std::move(coords));
    case Repr::sparse: {
      std::map<std::string, double> m;
      for (std::size_t i = 0; i < coords.size(); ++i) m[std::to_string(i + 1)] = coords[i];
      return Vector::sparse(std::move(m));
    }
  }
  return {};
}

void Space::check(const Vector& x) const {
  if (x.repr() != repr()) {
    throw StructuralError(std::string("vector of representation ") + repr_name(x.repr()) +
                          " does not belong to " + to_string());
  }
  if (repr() == Repr::dense && x.coords().size() != dim_) {
    throw StructuralError("dense vector of dimension " + std::to_string(x.coords().size()) +
                          " does not belong to " + to_string());
  }
  if (repr() == Repr::sequence && x.coords().size() > dim_) {
    throw StructuralError("sequence prefix of length " + std::to_string(x.coords().size()) +
                          " exceeds truncation of " + to_string());
  }
}

template <class Op>
Vector Space::combine(const Vector& x, const Vector& y, Op op) const {
  check(x);
  check(y);
  if (repr() == Repr::sparse) {
    std::map<std::string, double> out;
    auto ix = x.entries().begin();
    auto iy = y.entries().begin();
    while (ix != x.entries().end() || iy != y.entries().end()) {
      if (iy == y.entries().end() || (ix != x.entries().end() && ix->first < iy->first)) {
        out.emplace(ix->first, op(ix->second, 0.0));
        ++ix;
      } else if (ix == x.entries().end() || iy->first < ix->first) {
        out.emplace(iy->first, op(0.0, iy->second));
        ++iy;
      } else {
        out.emplace(ix->first, op(ix->second, iy->second));
        ++ix;
        ++iy;
      }
    }
    return Vector::sparse(std::move(out));
  }
  auto xs = x.coords();
  auto ys = y.coords();
  std::size_t n = std::max(xs.size(), ys.size());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = op(i < xs.size() ? xs[i] : 0.0, i < ys.size() ? ys[i] : 0.0);
  }
  return repr() == Repr::dense ? Vector::dense(std::move(out)) : Vector::sequence(std::move(out));
}

Vector Space::add(const Vector& x, const Vector& y) const {
  return combine(x, y, [](double a, double b) { return a + b; });
}

Vector Space::sub(const Vector& x, const Vector& y) const {
  return combine(x, y, [](double a, double b) { return a - b; });
}

Vector Space::scale(double lambda, const Vector& x) const {
  check(x);
  switch (repr()) {
    case Repr::sparse: {
      std::map<std::string, double> out;
      for (const auto& [k, v] : x.entries()) out.emplace(k, lambda * v);
      return Vector::sparse(std::move(out));
    }
    case Repr::dense:
    case Repr::sequence: {
      std::vector<double> out(x.coords().begin(), x.coords().end());
      for (double& v : out) v *= lambda;
      if (lambda == 0.0) std::fill(out.begin(), out.end(), 0.0);
      return repr() == Repr::dense ? Vector::dense(std::move(out)) : Vector::sequence(std::move(out));
    }
  }
  return {};
}

double Space::metric(const Vector& x, const Vector& y) const {
  check(x);
  check(y);
  if (repr() == Repr::sparse) {
    double sum = 0.0;
    auto ix = x.entries().begin();
    auto iy = y.entries().begin();
    while (ix != x.entries().end() || iy != y.entries().end()) {
      if (iy == y.entries().end() || (ix != x.entries().end() && ix->first < iy->first)) {
        sum += std::abs(ix->second);
        ++ix;
      } else if (ix == x.entries().end() || iy->first < ix->first) {
        sum += std::abs(iy->second);
        ++iy;
      } else {
        sum += std::abs(ix->second - iy->second);
        ++ix;
        ++iy;
      }
    }
    return sum;
  }
  auto xs = x.coords();
  auto ys = y.coords();
  std::size_t n = std::max(xs.size(), ys.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = std::abs((i < xs.size() ? xs[i] : 0.0) - (i < ys.size() ? ys[i] : 0.0));
    switch (kind_) {
      case SpaceKind::euclidean: acc += d * d; break;
      case SpaceKind::omega_sup: acc = std::max(acc, std::min(d, 1.0) / static_cast<double>(i + 1)); break;
      case SpaceKind::omega_sum: acc += std::ldexp(std::min(d, 1.0), -static_cast<int>(i + 1)); break;
      case SpaceKind::lp:
        if (p_ == 1.0) acc += d;
        else if (p_ == 2.0) acc += d * d;
        else acc += std::pow(d, p_);
        break;
      case SpaceKind::linf: acc = std::max(acc, d); break;
      case SpaceKind::l1_gamma: break;
    }
  }
  if (kind_ == SpaceKind::euclidean) return std::sqrt(acc);
  if (kind_ == SpaceKind::lp) {
    if (p_ == 1.0) return acc;
    if (p_ == 2.0) return std::sqrt(acc);
    return std::pow(acc, 1.0 / p_);
  }
  return acc;
}

double Space::magnitude(const Vector& x) const { return metric(zero(), x); }

namespace {

Vector random_vector(const Space& space, Rng& rng, double range) {
  switch (space.repr()) {
    case Repr::dense:
    case Repr::sequence: {
      std::vector<double> c(space.dimension());
      for (double& v : c) v = rng.uniform(-range, range);
      return space.from_coords(std::move(c));
    }
    case Repr::sparse: {
      std::map<std::string, double> m;
      for (int k = 0; k < 12; ++k) {
        if (rng.uniform() < 0.5) m["g" + std::to_string(k)] = rng.uniform(-range, range);
      }
      return Vector::sparse(std::move(m));
    }
  }
  return {};
}

Vector perturb(const Space& space, const Vector& x, Rng& rng, double limit) {
  switch (space.repr()) {
    case Repr::dense:
    case Repr::sequence: {
      std::vector<double> c(space.dimension());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coordinate(i) + rng.uniform(-limit, limit);
      return space.from_coords(std::move(c));
    }
    case Repr::sparse: {
      auto m = x.entries();
      for (auto& [k, v] : m) v += rng.uniform(-limit, limit);
      return Vector::sparse(std::move(m));
    }
  }
  return {};
}

double max_coord_diff(const Vector& x, const Vector& y) {
  double worst = 0.0;
  if (x.repr() == Repr::sparse) {
    for (const auto& [k, v] : x.entries()) {
      auto it = y.entries().find(k);
      worst = std::max(worst, std::abs(v - (it == y.entries().end() ? 0.0 : it->second)));
    }
    for (const auto& [k, v] : y.entries()) {
      if (!x.entries().contains(k)) worst = std::max(worst, std::abs(v));
    }
    return worst;
  }
  std::size_t n = std::max(x.coords().size(), y.coords().size());
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(x.coordinate(i) - y.coordinate(i)));
  return worst;
}

}  // namespace

MetricProbeReport check_translation_invariance(const Space& space, const ProbeSampler& sampler) {
  MetricProbeReport report;
  report.property = "translation-invariance";
  report.space = space.to_string();
  report.tolerance = sampler.tolerance;
  report.seed = sampler.seed;
  Rng rng(sampler.seed);
  for (std::size_t s = 0; s < sampler.samples; ++s) {
    Vector x = random_vector(space, rng, sampler.coord_range);
    Vector y = sampler.max_coord_diff ? perturb(space, x, rng, *sampler.max_coord_diff)
                                      : random_vector(space, rng, sampler.coord_range);
    Vector z = random_vector(space, rng, sampler.coord_range);
    double v = std::abs(space.metric(space.add(x, z), space.add(y, z)) - space.metric(x, y));
    ++report.samples;
    if (v > sampler.tolerance) ++report.violations;
    if (v > report.worst_violation) {
      report.worst_violation = v;
      if (v > sampler.tolerance) report.witness = ProbeWitness{x, y, z, std::nullopt, v};
    }
  }
  return report;
}

std::vector<double> default_lambda_grid() {
  return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
}

MetricProbeReport check_scaling_inequality(const Space& space, const ProbeSampler& sampler,
                                           std::span<const double> lambdas) {
  for (double l : lambdas) {
    if (!(l >= 0.0 && l < 1.0)) throw DomainError("scaling probe needs lambda in [0, 1)");
  }
  MetricProbeReport report;
  report.property = "scaling-inequality";
  report.space = space.to_string();
  report.tolerance = sampler.tolerance;
  report.seed = sampler.seed;

  auto consider = [&](const Vector& x, const Vector& y, double l) {
    double v = space.metric(space.scale(l, x), space.scale(l, y)) - l * space.metric(x, y);
    v = std::max(v, 0.0);
    if (v > sampler.tolerance) ++report.violations;
    if (v > report.worst_violation) {
      report.worst_violation = v;
      if (v > sampler.tolerance) report.witness = ProbeWitness{x, y, std::nullopt, l, v};
    }
  };

  // corpus: x = 2e_1, y = 0 clamps the first coordinate of a product metric
  std::vector<double> corpus_lambdas(lambdas.begin(), lambdas.end());
  if (std::find(corpus_lambdas.begin(), corpus_lambdas.end(), 0.6) == corpus_lambdas.end()) {
    corpus_lambdas.push_back(0.6);
  }
  std::vector<std::pair<Vector, Vector>> corpus = {
      {space.from_coords({2.0}), space.zero()},
      {space.from_coords({-1.5}), space.from_coords({0.5})},
  };
  if (space.repr() != Repr::dense || space.dimension() >= 2) {
    corpus.emplace_back(space.from_coords({0.0, 3.0}), space.zero());
  }
  for (const auto& [x, y] : corpus) {
    if (sampler.max_coord_diff && max_coord_diff(x, y) > *sampler.max_coord_diff) continue;
    ++report.samples;
    for (double l : corpus_lambdas) consider(x, y, l);
  }

  Rng rng(sampler.seed);
  for (std::size_t s = 0; s < sampler.samples; ++s) {
    Vector x = random_vector(space, rng, sampler.coord_range);
    Vector y = sampler.max_coord_diff ? perturb(space, x, rng, *sampler.max_coord_diff)
                                      : random_vector(space, rng, sampler.coord_range);
    ++report.samples;
    for (double l : lambdas) consider(x, y, l);
  }
  return report;
}

}  // namespace metrivec
