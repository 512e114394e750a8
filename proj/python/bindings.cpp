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

// Python bindings. Reports cross the boundary as JSON text so the Python
// side sees exactly what the CLI prints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "metrivec/cli.hpp"
#include "metrivec/errors.hpp"
#include "metrivec/gallery.hpp"
#include "metrivec/serialize.hpp"
#include "metrivec/spaces.hpp"

namespace py = pybind11;
using namespace metrivec;

PYBIND11_MODULE(_core, m) {
  m.doc() = "metrivec core";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  m.attr("__version__") = std::string(version);

  m.def("default_config", [] { return cli::to_json(cli::ExperimentConfig{}).dump(); },
        "Default experiment config as JSON text.");

  m.def(
      "execute",
      [](const std::string& config_json) {
        auto config = cli::config_from_json(Json::parse(config_json));
        cli::CommandOutput out;
        {
          py::gil_scoped_release release;
          out = cli::execute(config);
        }
        return std::make_pair(dump(out.report), out.csv);
      },
      py::arg("config_json"), "Run one command; returns (report JSON, CSV).");

  m.def(
      "metric",
      [](const std::string& space, const std::vector<double>& x, const std::vector<double>& y) {
        Space s = Space::parse(space);
        return s.metric(s.from_coords(x), s.from_coords(y));
      },
      py::arg("space"), py::arg("x"), py::arg("y"), "Distance between two coordinate vectors.");

  m.def(
      "rational_enumeration",
      [](std::size_t n) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& q : rational_enumeration(n)) out.emplace_back(q.num, q.den);
        return out;
      },
      py::arg("n"), "First n rationals of [0, 1] as (p, q) pairs.");

  m.def("space_grammar", [] { return std::string(Space::grammar); });
  m.def("function_grammar", [] { return std::string(gallery_grammar); });
}
