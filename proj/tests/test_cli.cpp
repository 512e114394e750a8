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

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "metrivec/cli.hpp"

using namespace metrivec;
using namespace metrivec::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "metrivec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config round trip") {
    ExperimentConfig c;
    c.command = "adversary";
    c.space = "lp:2:1000";
    c.fn = "rationals";
    c.eps = 1e-3;
    c.seed = 42;
    c.trunc = 1000;
    c.points = {"1/3", "sqrt(2)/2"};
    c.n = 50;
    auto back = config_from_json(to_json(c));
    CHECK(to_json(back) == to_json(c));
    CHECK(back.points == c.points);
    CHECK(back.eps == c.eps);
    CHECK_FALSE(back.tau.has_value());
  }

  TEST_CASE("mesh schedule") {
    ExperimentConfig c;
    auto s = mesh_schedule(c);
    REQUIRE(!s.empty());
    CHECK(s.back() == 16384);
    CHECK(s.size() == 12);
    CHECK(s.front() == 8);
    c.mesh_min = 1e-3;
    c.mesh_levels = 3;
    s = mesh_schedule(c);
    CHECK(s == std::vector<std::size_t>{256, 512, 1024});
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({}).code == ExitCode::usage);
    CHECK(invoke({"--help"}).code == ExitCode::ok);
    CHECK(invoke({"integrate", "--fn", "nope"}).code == ExitCode::usage);
    CHECK(invoke({"integrate", "--space", "lp:0"}).code == ExitCode::usage);
    CHECK(invoke({"integrate", "--fn", "rationals", "--space", "lp:2:10"}).code == ExitCode::capability);
    CHECK(invoke({"adversary", "--fn", "smooth:trig", "--N", "8"}).code == ExitCode::capability);
    CHECK(invoke({"integrate", "--fn", "smooth:poly12", "--out", "/nonexistent/dir/x.json"}).code == ExitCode::io);
    auto ok = invoke({"integrate", "--fn", "smooth:poly12", "--seed", "3"});
    CHECK(ok.code == ExitCode::ok);
    auto j = Json::parse(ok.out);
    CHECK(j["command"] == "integrate");
    CHECK(j["seed"] == 3);
    CHECK(j["version"] == version);
    CHECK(j["report"]["converged"] == true);
  }

  TEST_CASE("refuting runs still complete") {
    auto r = invoke({"integrate", "--fn", "digits:16", "--space", "linf:16", "--mesh-levels", "4"});
    CHECK(r.code == ExitCode::ok);
    CHECK(Json::parse(r.out)["report"]["converged"] == false);
  }

  TEST_CASE("same seed gives identical bytes") {
    std::vector<std::string> args{"oscillate", "--fn", "rationals", "--space", "omega-sup:1000",
                                  "--points", "1/3,sqrt(2)/2", "--seed", "11"};
    auto first = invoke(args);
    auto second = invoke(args);
    CHECK(first.code == ExitCode::ok);
    CHECK(first.out == second.out);
    auto adv = std::vector<std::string>{"adversary", "--fn", "rationals", "--space", "lp:2:1000", "--N", "50"};
    CHECK(invoke(adv).out == invoke(adv).out);
  }

  TEST_CASE("csv output") {
    auto r = invoke({"integrate", "--fn", "smooth:trig", "--format", "csv", "--mesh-levels", "3"});
    CHECK(r.code == ExitCode::ok);
    CHECK(r.out.rfind("mesh,worst_separation,samples", 0) == 0);
  }
}
