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

#include "metrivec/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace metrivec {

double round_digits(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

Json number(double x) { return std::isfinite(x) ? Json(round_digits(x)) : Json(nullptr); }

Json numbers(std::span<const double> xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

Json to_json(const Vector& v) {
  if (v.repr() == Repr::sparse) {
    Json out = Json::object();
    for (const auto& [k, x] : v.entries()) out[k] = number(x);
    return out;
  }
  return numbers(v.coords());
}

Json to_json(const Point& p) { return number(p.value()); }

namespace {

Json exact_strings(std::span<const Point> pts) {
  Json out = Json::array();
  bool any = false;
  for (const auto& p : pts) {
    if (p.is_rational()) {
      out.push_back(p.exact_value()->to_string());
      any = true;
    } else {
      out.push_back(nullptr);
    }
  }
  return any ? out : Json(nullptr);
}

Json point_values(std::span<const Point> pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(number(p.value()));
  return out;
}

Json optional_number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

Json levels_json(std::span<const LevelRecord> levels) {
  Json out = Json::array();
  for (const auto& l : levels) out.push_back(to_json(l));
  return out;
}

}  // namespace

Json to_json(const Partition& p) {
  Json out{{"points", point_values(p.points())}};
  if (auto ex = exact_strings(p.points()); !ex.is_null()) out["rational_points"] = ex;
  return out;
}

Json to_json(const TaggedPartition& p) {
  Json out = to_json(p.partition());
  out["tags"] = point_values(p.tags());
  if (auto ex = exact_strings(p.tags()); !ex.is_null()) out["rational_tags"] = ex;
  return out;
}

Json to_json(const LevelRecord& r) {
  return {{"intervals", r.intervals}, {"mesh", number(r.mesh)}, {"worst", number(r.worst)}, {"samples", r.samples}};
}

Json to_json(const IntegrationReport& r) {
  return {{"kind", "integration"},
          {"integrand", r.integrand},
          {"space", r.space},
          {"a", number(r.a)},
          {"b", number(r.b)},
          {"estimate", to_json(r.estimate)},
          {"levels", levels_json(r.levels)},
          {"converged", r.converged},
          {"eps", number(r.eps)},
          {"delta", number(r.delta)},
          {"tag_samples", r.tag_samples},
          {"seed", r.seed},
          {"evidence", r.evidence},
          {"annotations", r.annotations}};
}

Json to_json(const CriterionReport& r) {
  Json out{{"kind", "criterion"},
           {"criterion", r.criterion},
           {"integrand", r.integrand},
           {"space", r.space},
           {"worst", number(r.worst)},
           {"samples", r.samples},
           {"seed", r.seed},
           {"eps", optional_number(r.eps)},
           {"status", r.status},
           {"levels", levels_json(r.levels)},
           {"annotations", r.annotations}};
  if (r.witness) out["witness"] = {to_json(r.witness->first), to_json(r.witness->second)};
  if (!r.witness_intervals.empty()) {
    Json iv = Json::array();
    for (const auto& [c, d] : r.witness_intervals) iv.push_back({number(c.value()), number(d.value())});
    out["witness_intervals"] = iv;
  }
  return out;
}

Json to_json(const OscillationProfile& r) {
  Json out{{"kind", "oscillation"},
           {"target", r.target},
           {"integrand", r.integrand},
           {"space", r.space},
           {"estimate", number(r.estimate)},
           {"location", numbers(r.location)},
           {"schedule", numbers(r.schedule)},
           {"window_estimates", numbers(r.window_estimates)},
           {"samples", r.samples},
           {"seed", r.seed},
           {"witness_assisted", r.witness_assisted},
           {"monotone", r.monotone},
           {"lower_bound", true}};
  if (r.witness) out["witness"] = {to_json(r.witness->first), to_json(r.witness->second)};
  return out;
}

Json to_json(const MeasureEstimate& r, bool with_grid) {
  Json out{{"kind", "measure"},         {"r", number(r.r)},         {"grid", r.grid},
           {"step", number(r.step)},    {"lower", number(r.lower)}, {"upper", number(r.upper)},
           {"confirmed", r.confirmed}, {"clean", r.clean}};
  if (with_grid) {
    out["points"] = numbers(r.points);
    out["estimates"] = numbers(r.estimates);
    out["classes"] = r.classes;
  }
  return out;
}

Json to_json(const MetricProbeReport& r) {
  Json out{{"kind", "metric-probe"},
           {"property", r.property},
           {"space", r.space},
           {"samples", r.samples},
           {"worst_violation", number(r.worst_violation)},
           {"violations", r.violations},
           {"tolerance", number(r.tolerance)},
           {"seed", r.seed}};
  if (r.witness) {
    Json w{{"x", to_json(r.witness->x)}, {"y", to_json(r.witness->y)}, {"violation", number(r.witness->violation)}};
    if (r.witness->z) w["z"] = to_json(*r.witness->z);
    if (r.witness->lambda) w["lambda"] = number(*r.witness->lambda);
    out["witness"] = w;
  }
  return out;
}

Json to_json(const AdversaryResult& r) {
  return {{"kind", "adversary"},
          {"function", r.function},
          {"space", r.space},
          {"r", number(r.r)},
          {"N", r.n},
          {"first", to_json(r.first)},
          {"second", to_json(r.second)},
          {"meeting", r.meeting},
          {"measure", to_json(r.measure)},
          {"achieved", number(r.achieved)},
          {"floor", number(r.floor)},
          {"meets_floor", r.meets_floor},
          {"annotations", r.annotations}};
}

Json to_json(const CoordinateContinuityReport& r) {
  return {{"kind", "coordinate-continuity"},
          {"t", number(r.t)},
          {"coordinates", r.coordinates},
          {"deltas", numbers(r.deltas)},
          {"coordinate_estimates", numbers(r.coordinate_estimates)},
          {"product_space", r.product_space},
          {"product_estimates", numbers(r.product_estimates)},
          {"tail", number(r.tail)},
          {"coordinatewise_continuous", r.coordinatewise_continuous},
          {"product_to_zero", r.product_to_zero},
          {"agree", r.agree}};
}

Json to_json(const PrimitiveTable& r) {
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(to_json(v));
  Json conv = Json::array();
  for (bool c : r.converged) conv.push_back(c);
  return {{"kind", "primitive"},    {"integrand", r.integrand}, {"space", r.space},
          {"points", numbers(r.points)}, {"values", values},     {"converged", conv}};
}

Json to_json(const DerivativeProbeReport& r) {
  return {{"kind", "derivative-probe"},      {"t", number(r.t)},
          {"space", r.space},                {"candidate", to_json(r.candidate)},
          {"steps", numbers(r.steps)},       {"ratios", numbers(r.ratios)},
          {"threshold", number(r.threshold)}, {"verdict", r.verdict}};
}

Json to_json(const FtcReport& r) {
  Json out{{"kind", "ftc"},
           {"space", r.space},
           {"a", number(r.a)},
           {"tau", number(r.tau)},
           {"residual", number(r.residual)},
           {"reliable", r.reliable},
           {"integration", to_json(r.integration)},
           {"level_residuals", levels_json(r.level_residuals)}};
  out["continuity_max_oscillation"] = optional_number(r.continuity_max_oscillation);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string fmt(double x) {
  if (!std::isfinite(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", print_digits, x);
  return buf;
}

}  // namespace

std::string convergence_csv(std::span<const LevelRecord> levels) {
  std::ostringstream out;
  out << "mesh,worst_separation,samples\n";
  for (const auto& l : levels) out << fmt(l.mesh) << ',' << fmt(l.worst) << ',' << l.samples << '\n';
  return out.str();
}

std::string primitive_csv(const PrimitiveTable& table) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& v : table.values) width = std::max(width, v.repr() == Repr::sparse ? v.entries().size() : v.coords().size());
  out << 't';
  for (std::size_t i = 1; i <= width; ++i) out << ",x" << i;
  out << ",converged\n";
  for (std::size_t j = 0; j < table.points.size(); ++j) {
    out << fmt(table.points[j]);
    for (std::size_t i = 0; i < width; ++i) out << ',' << fmt(table.values[j].coordinate(i));
    out << ',' << (table.converged[j] ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string grid_csv(const MeasureEstimate& m) {
  std::ostringstream out;
  out << "t,omega_estimate,class\n";
  for (std::size_t j = 0; j < m.points.size(); ++j) {
    out << fmt(m.points[j]) << ',' << fmt(m.estimates[j]) << ',' << m.classes[j] << '\n';
  }
  return out.str();
}

}  // namespace metrivec
