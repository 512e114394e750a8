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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "metrivec/serialize.hpp"

namespace metrivec::cli {

/// Everything a command needs; embedded verbatim in every report.
struct ExperimentConfig {
  std::string command;
  std::string space;
  std::string fn;
  double a = 0.0;
  double b = 1.0;
  std::optional<double> eps;
  std::optional<double> mesh_min;
  std::size_t mesh_levels = 12;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trunc;
  std::string out;
  std::string format = "json";
  std::vector<std::string> points;
  double r = 1.0;
  std::size_t n = 0;
  std::optional<double> tau;
  std::size_t grid = 4096;
  std::optional<std::size_t> samples;
  bool precheck = false;
};

Json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const Json& j);

/// Uniform interval counts for the mesh flags: the finest level has mesh
/// <= mesh_min (default (b - a)/2^14), coarser ones halve the count.
std::vector<std::size_t> mesh_schedule(const ExperimentConfig& c);

struct CommandOutput {
  Json report;
  std::string csv;
};

CommandOutput cmd_integrate(const ExperimentConfig& c);
CommandOutput cmd_oscillate(const ExperimentConfig& c);
CommandOutput cmd_darboux(const ExperimentConfig& c);
CommandOutput cmd_adversary(const ExperimentConfig& c);
CommandOutput cmd_ftc(const ExperimentConfig& c);
CommandOutput cmd_spacecheck(const ExperimentConfig& c);
CommandOutput cmd_atlas(const ExperimentConfig& c);

/// Dispatches on c.command and wraps the report with config, seed and version.
CommandOutput execute(const ExperimentConfig& c);

enum ExitCode : int { ok = 0, failure = 1, usage = 2, capability = 3, construction = 4, io = 5 };

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace metrivec::cli
