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

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metrivec/point.hpp"
#include "metrivec/spaces.hpp"

namespace metrivec {

/// Given a point t, a radius and a target separation, returns v with
/// |v - t| <= radius and d(f(t), f(v)) >= separation, or nothing.
using WitnessOracle = std::function<std::optional<Point>(const Point& t, double radius, double separation)>;

/// A function [a, b] -> X together with its declared codomain.
///
/// Evaluation must be deterministic. A known bound L (d(0, f(t)) <= L) and
/// a discontinuity witness oracle are optional metadata used by probes.
class Integrand {
 public:
  using Evaluator = std::function<Vector(const Point&)>;

  Integrand(std::string id, Space space, Evaluator eval)
      : id_(std::move(id)), space_(std::move(space)), eval_(std::move(eval)) {}

  const std::string& id() const { return id_; }
  const Space& space() const { return space_; }

  Vector operator()(const Point& t) const { return eval_(t); }
  Vector operator()(double t) const { return eval_(Point::generic(t)); }

  const std::optional<double>& bound() const { return bound_; }
  Integrand& with_bound(double l) {
    bound_ = l;
    return *this;
  }

  bool has_witness() const { return static_cast<bool>(witness_); }
  const WitnessOracle& witness() const { return witness_; }
  Integrand& with_witness(WitnessOracle oracle) {
    witness_ = std::move(oracle);
    return *this;
  }

  /// Flags appended to reports whose probes refute integrability of f.
  const std::vector<std::string>& refutation_notes() const { return notes_; }
  Integrand& with_refutation_note(std::string note) {
    notes_.push_back(std::move(note));
    return *this;
  }

 private:
  std::string id_;
  Space space_;
  Evaluator eval_;
  std::optional<double> bound_;
  WitnessOracle witness_;
  std::vector<std::string> notes_;
};

/// Space hypothesis annotations, plus f's refutation notes when refuted.
std::vector<std::string> report_annotations(const Integrand& f, bool refuted);

/// Pointwise sum f + g (same space).
Integrand operator+(const Integrand& f, const Integrand& g);
/// Pointwise lambda * f.
Integrand operator*(double lambda, const Integrand& f);
/// Coordinate i (0-based) of f as a function into euclidean(1).
Integrand coordinate(const Integrand& f, std::size_t i);
/// Same values reinterpreted in another sequence space (truncating beyond its M).
Integrand view_in(const Integrand& f, const Space& target);

}  // namespace metrivec
