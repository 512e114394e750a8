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

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "metrivec/calculus.hpp"
#include "metrivec/gallery.hpp"
#include "metrivec/integration.hpp"
#include "metrivec/oscillation.hpp"
#include "metrivec/spaces.hpp"

namespace metrivec {

using Json = nlohmann::json;

inline constexpr std::string_view version = "0.1.0";
/// Significant digits kept for every double written to a report.
inline constexpr int print_digits = 12;

double round_digits(double x, int digits = print_digits);
/// Rounded number, or null when not finite.
Json number(double x);
Json numbers(std::span<const double> xs);

/// Coordinate arrays for dense and sequence vectors, label -> value objects
/// for sparse ones.
Json to_json(const Vector& v);
Json to_json(const Point& p);
Json to_json(const Partition& p);
Json to_json(const TaggedPartition& p);
Json to_json(const LevelRecord& r);
Json to_json(const IntegrationReport& r);
Json to_json(const CriterionReport& r);
Json to_json(const OscillationProfile& r);
Json to_json(const MeasureEstimate& r, bool with_grid = false);
Json to_json(const MetricProbeReport& r);
Json to_json(const AdversaryResult& r);
Json to_json(const CoordinateContinuityReport& r);
Json to_json(const PrimitiveTable& r);
Json to_json(const DerivativeProbeReport& r);
Json to_json(const FtcReport& r);

/// Two-space indented JSON with a trailing newline; keys are sorted.
std::string dump(const Json& j);

/// mesh,worst_separation,samples
std::string convergence_csv(std::span<const LevelRecord> levels);
/// t,<coordinates...>,converged
std::string primitive_csv(const PrimitiveTable& table);
/// t,omega_estimate,class
std::string grid_csv(const MeasureEstimate& m);

}  // namespace metrivec
