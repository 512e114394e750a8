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

#include "metrivec/integrand.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "metrivec/errors.hpp"

namespace metrivec {

Integrand operator+(const Integrand& f, const Integrand& g) {
  if (!(f.space() == g.space())) throw StructuralError("cannot add integrands with different codomains");
  Integrand out(f.id() + "+" + g.id(), f.space(),
                [f, g](const Point& t) { return f.space().add(f(t), g(t)); });
  if (f.bound() && g.bound() && f.space().is_normed()) out.with_bound(*f.bound() + *g.bound());
  return out;
}

Integrand operator*(double lambda, const Integrand& f) {
  return Integrand(f.id() + "*" + Point::generic(lambda).to_string(), f.space(),
                   [lambda, f](const Point& t) { return f.space().scale(lambda, f(t)); });
}

Integrand coordinate(const Integrand& f, std::size_t i) {
  Integrand out(f.id() + "[" + std::to_string(i + 1) + "]", Space::euclidean(1),
                [f, i](const Point& t) { return Vector::dense({f(t).coordinate(i)}); });
  if (f.has_witness()) {
    // the parent's witness is still a good candidate for the scalar view
    auto parent = f.witness();
    out.with_witness([parent, f, i](const Point& t, double radius, double sep) -> std::optional<Point> {
      auto v = parent(t, radius, 0.0);
      if (!v) return std::nullopt;
      if (std::abs(f(*v).coordinate(i) - f(t).coordinate(i)) < sep) return std::nullopt;
      return v;
    });
  }
  return out;
}

Integrand view_in(const Integrand& f, const Space& target) {
  if (!target.is_sequence() && target.repr() != Repr::dense) {
    throw CapabilityError("view_in needs a coordinate space, got " + target.to_string());
  }
  Space source = f.space();
  auto convert = [source, target](const Vector& v) {
    std::size_t n = source.repr() == Repr::sparse ? target.dimension() : v.coords().size();
    n = std::min(n, target.dimension());
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = v.coordinate(i);
    return target.from_coords(std::move(c));
  };
  Integrand out(f.id(), target, [f, convert](const Point& t) { return convert(f(t)); });
  if (f.has_witness()) {
    auto parent = f.witness();
    out.with_witness([parent, f, target, convert](const Point& t, double radius, double sep) -> std::optional<Point> {
      auto v = parent(t, radius, 0.0);
      if (!v) return std::nullopt;
      if (target.metric(convert(f(t)), convert(f(*v))) < sep) return std::nullopt;
      return v;
    });
  }
  return out;
}

std::vector<std::string> report_annotations(const Integrand& f, bool refuted) {
  auto out = f.space().hypothesis_annotations();
  if (refuted) out.insert(out.end(), f.refutation_notes().begin(), f.refutation_notes().end());
  return out;
}

}  // namespace metrivec
