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

#include "metrivec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "metrivec/errors.hpp"

namespace metrivec::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

template <class T>
Json opt(const std::optional<T>& x) {
  if (!x) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    return number(*x);
  } else {
    return *x;
  }
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

std::string fn_head(std::string_view fn) { return std::string(fn.substr(0, fn.find(':'))); }

// M needed by the function's truncation.
std::size_t needed_m(std::string_view fn) {
  auto head = fn_head(fn);
  auto colon = fn.find(':');
  std::size_t n = 0;
  if (colon != std::string_view::npos) {
    for (char ch : fn.substr(colon + 1)) {
      if (ch < '0' || ch > '9') return 0;
      n = n * 10 + static_cast<std::size_t>(ch - '0');
    }
  }
  if (head == "rationals") return colon == std::string_view::npos ? 1000 : n;
  if (head == "digits") return colon == std::string_view::npos ? 24 : n;
  return 0;
}

std::string default_space_for(std::string_view fn) {
  auto head = fn_head(fn);
  if (head == "smooth") {
    auto name = fn.substr(fn.find(':') + 1);
    std::size_t dim = name == "linear" ? 1 : name == "mixed" ? 4 : 2;
    return "euclidean:" + std::to_string(dim);
  }
  if (head == "digits") return "linf";
  if (head == "ratind") return "l1gamma";
  return "lp:2";
}

Space resolve_space(const ExperimentConfig& c) {
  std::string text = c.space.empty() ? default_space_for(c.fn) : c.space;
  return Space::parse(text, c.trunc.value_or(std::max<std::size_t>(64, needed_m(c.fn))));
}

GalleryFunction resolve_function(const ExperimentConfig& c) {
  if (c.fn.empty()) throw UsageError("--fn is required; expected " + std::string(gallery_grammar));
  return make_gallery(c.fn, resolve_space(c));
}

OscillationSampler sampler_for(const ExperimentConfig& c) {
  OscillationSampler s;
  s.seed = c.seed;
  if (c.samples) s.samples = *c.samples;
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

Json to_json(const ExperimentConfig& c) {
  return {{"command", c.command},
          {"space", c.space},
          {"fn", c.fn},
          {"a", number(c.a)},
          {"b", number(c.b)},
          {"eps", opt(c.eps)},
          {"mesh_min", opt(c.mesh_min)},
          {"mesh_levels", c.mesh_levels},
          {"seed", c.seed},
          {"trunc", opt(c.trunc)},
          {"out", c.out},
          {"format", c.format},
          {"points", c.points},
          {"r", number(c.r)},
          {"N", c.n},
          {"tau", opt(c.tau)},
          {"grid", c.grid},
          {"samples", opt(c.samples)},
          {"precheck", c.precheck}};
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  c.command = j.at("command").get<std::string>();
  c.space = j.at("space").get<std::string>();
  c.fn = j.at("fn").get<std::string>();
  c.a = j.at("a").get<double>();
  c.b = j.at("b").get<double>();
  c.eps = get_opt<double>(j, "eps");
  c.mesh_min = get_opt<double>(j, "mesh_min");
  c.mesh_levels = j.at("mesh_levels").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.trunc = get_opt<std::size_t>(j, "trunc");
  c.out = j.at("out").get<std::string>();
  c.format = j.at("format").get<std::string>();
  c.points = j.at("points").get<std::vector<std::string>>();
  c.r = j.at("r").get<double>();
  c.n = j.at("N").get<std::size_t>();
  c.tau = get_opt<double>(j, "tau");
  c.grid = j.at("grid").get<std::size_t>();
  c.samples = get_opt<std::size_t>(j, "samples");
  c.precheck = j.at("precheck").get<bool>();
  return c;
}

std::vector<std::size_t> mesh_schedule(const ExperimentConfig& c) {
  if (!(c.a < c.b)) throw DomainError("need a < b");
  if (c.mesh_levels == 0) throw UsageError("--mesh-levels must be positive");
  const double len = c.b - c.a;
  const double mesh_min = c.mesh_min.value_or(std::ldexp(len, -14));
  if (!(mesh_min > 0)) throw UsageError("--mesh-min must be positive");
  std::size_t finest = 1;
  while (len / static_cast<double>(finest) > mesh_min) {
    finest *= 2;
    if (finest > (std::size_t{1} << 26)) throw UsageError("--mesh-min is too small");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0, n = finest; i < c.mesh_levels && n >= 1; ++i, n /= 2) {
    out.push_back(n);
    if (n == 1) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

CommandOutput cmd_integrate(const ExperimentConfig& c) {
  auto g = resolve_function(c);
  IntegrateConfig cfg;
  cfg.eps = c.eps.value_or(1e-4);
  cfg.levels = mesh_schedule(c);
  cfg.seed = c.seed;
  if (c.samples) cfg.tag_samples = *c.samples;
  auto rep = integrate(g.f, c.a, c.b, cfg);
  return {to_json(rep), convergence_csv(rep.levels)};
}

CommandOutput cmd_oscillate(const ExperimentConfig& c) {
  auto g = resolve_function(c);
  auto sampler = sampler_for(c);
  Json profiles = Json::array();
  std::ostringstream csv;
  if (c.n > 0) {
    auto prof = oscillation_sum(g.f, uniform_points(c.a, c.b, c.n), sampler);
    profiles.push_back(to_json(prof));
    csv << "left,right,omega_estimate\n";
    for (std::size_t i = 0; i < prof.window_estimates.size(); ++i) {
      csv << round_digits(prof.location[i]) << ',' << round_digits(prof.location[i + 1]) << ','
          << round_digits(prof.window_estimates[i]) << '\n';
    }
  } else {
    if (c.points.empty()) throw UsageError("oscillate needs --points or --N");
    auto deltas = default_delta_schedule(c.a, c.b);
    csv << "t,omega_estimate\n";
    for (const auto& text : c.points) {
      auto prof = pointwise_oscillation(g.f, Point::parse(text), deltas, sampler, c.a, c.b);
      profiles.push_back(to_json(prof));
      csv << round_digits(prof.location[0]) << ',' << round_digits(prof.estimate) << '\n';
    }
  }
  return {Json{{"kind", "oscillation-set"}, {"profiles", profiles}}, csv.str()};
}

CommandOutput cmd_darboux(const ExperimentConfig& c) {
  auto g = resolve_function(c);
  auto levels = mesh_schedule(c);
  auto rep = darboux_probe(g.f, c.a, c.b, levels, c.eps.value_or(0.05), sampler_for(c));
  return {to_json(rep), convergence_csv(rep.levels)};
}

CommandOutput cmd_adversary(const ExperimentConfig& c) {
  ExperimentConfig d = c;
  if (d.fn.empty()) d.fn = "ratind";
  auto g = resolve_function(d);
  auto res = adversary_partitions(g, c.r, c.n == 0 ? 100 : c.n, sampler_for(c));
  return {to_json(res), grid_csv(res.measure)};
}

CommandOutput cmd_ftc(const ExperimentConfig& c) {
  auto g = resolve_function(c);
  if (!g.derivative) throw CapabilityError(g.id + " has no analytic derivative; ftc needs a smooth:<name> function");
  Integrand deriv(g.id + "'", g.f.space(), g.derivative);
  FtcConfig cfg;
  cfg.integrate.eps = c.eps.value_or(1e-3);
  cfg.integrate.levels = mesh_schedule(c);
  cfg.integrate.seed = c.seed;
  if (c.samples) cfg.integrate.tag_samples = *c.samples;
  cfg.precheck_continuity = c.precheck;
  const Integrand& F = g.f;
  auto rep = ftc_check([&F](double t) { return F(t); }, deriv, c.a, c.tau.value_or(c.b), cfg);
  return {to_json(rep), convergence_csv(rep.level_residuals)};
}

CommandOutput cmd_spacecheck(const ExperimentConfig& c) {
  if (c.space.empty()) throw UsageError("spacecheck needs --space; expected " + std::string(Space::grammar));
  Space s = Space::parse(c.space, c.trunc.value_or(64));
  ProbeSampler sampler;
  sampler.seed = c.seed;
  if (c.samples) sampler.samples = *c.samples;
  auto lambdas = default_lambda_grid();
  auto inv = check_translation_invariance(s, sampler);
  auto sc = check_scaling_inequality(s, sampler, lambdas);
  Json rep{{"kind", "spacecheck"},
           {"space", s.to_string()},
           {"translation_invariance", metrivec::to_json(inv)},
           {"scaling_inequality", metrivec::to_json(sc)},
           {"scaling_flag", to_string(s.scaling_flag())},
           {"lambdas", numbers(lambdas)},
           {"annotations", s.hypothesis_annotations()}};
  std::ostringstream csv;
  csv << "property,samples,worst_violation,violations\n";
  for (const auto* r : {&inv, &sc}) {
    csv << r->property << ',' << r->samples << ',' << round_digits(r->worst_violation) << ',' << r->violations << '\n';
  }
  return {rep, csv.str()};
}

CommandOutput cmd_atlas(const ExperimentConfig& c) {
  const std::size_t m = c.trunc.value_or(1000);
  std::vector<std::string> spaces =
      c.space.empty() ? std::vector<std::string>{"lp:1", "lp:2", "linf", "omega-sum", "omega-sup"} : split(c.space, ',');
  std::vector<std::string> fns = c.fn.empty()
                                     ? std::vector<std::string>{"rationals:1000", "digits:24", "ratind", "smooth:poly12",
                                                                "smooth:trig"}
                                     : split(c.fn, ',');
  const double eps = c.eps.value_or(0.05);
  const std::vector<double> rs{0.1, 0.5};
  const double small = 0.01;
  const std::size_t coarse_grid = std::max<std::size_t>(c.grid / 4, 1);
  ExperimentConfig levels_cfg = c;
  auto levels = mesh_schedule(levels_cfg);
  auto sampler = sampler_for(c);

  Json cells = Json::array();
  Json landscape = Json::array();
  std::ostringstream csv;
  csv << "space,function,darboux,bounded,upper_r0.1,upper_r0.5,continuity,match\n";
  std::size_t matches = 0;
  for (const auto& space_text : spaces) {
    Space space = Space::parse(space_text, m);
    Json pass_fns = Json::array(), ae_fns = Json::array();
    for (const auto& fn : fns) {
      auto g = make_gallery(fn, space);
      auto darboux = darboux_probe(g.f, 0.0, 1.0, levels, eps, sampler);
      auto coarse = discontinuity_measures(g.f, 0.0, 1.0, rs, coarse_grid, sampler);
      auto fine = discontinuity_measures(g.f, 0.0, 1.0, rs, c.grid, sampler);
      const bool bounded = g.f.bound().has_value() && std::isfinite(*g.f.bound());
      bool upper_small = true;
      Json brackets = Json::array();
      for (std::size_t i = 0; i < rs.size(); ++i) {
        upper_small = upper_small && fine[i].upper < small;
        brackets.push_back({{"r", number(rs[i])},
                            {"grids", {coarse_grid, c.grid}},
                            {"lower", {number(coarse[i].lower), number(fine[i].lower)}},
                            {"upper", {number(coarse[i].upper), number(fine[i].upper)}}});
      }
      const bool darboux_pass = darboux.status == "pass";
      const bool measure_side = bounded && upper_small;
      const bool match = darboux_pass == measure_side;
      matches += match ? 1 : 0;
      // classify by the smallest threshold on the finest grid
      std::string continuity = fine[0].upper < small                                 ? "continuous-ae"
                               : fine[0].lower >= 1.0 - 2.0 / static_cast<double>(c.grid) ? "nowhere-continuous"
                                                                                          : "inconclusive";
      Json cell{{"space", space.to_string()},
                {"function", g.id},
                {"structure", g.structure},
                {"bounded", bounded},
                {"bound", bounded ? number(*g.f.bound()) : Json(nullptr)},
                {"darboux", to_json(darboux)},
                {"darboux_pass", darboux_pass},
                {"measure", brackets},
                {"upper_to_zero", upper_small},
                {"continuity", continuity},
                {"match", match},
                {"annotations", space.hypothesis_annotations()}};
      if (g.f.has_witness()) {
        auto [u, v] = adversarial_taggings(g.f, uniform_points(0.0, 1.0, 64));
        cell["tag_separation"] = number(space.metric(riemann_sum(g.f, u), riemann_sum(g.f, v)));
      } else {
        cell["tag_separation"] = nullptr;
      }
      if (g.resolution) cell["resolution"] = number(*g.resolution);
      cells.push_back(cell);
      if (darboux_pass) pass_fns.push_back(g.id);
      if (continuity == "continuous-ae") ae_fns.push_back(g.id);
      csv << space.to_string() << ',' << g.id << ',' << darboux.status << ',' << (bounded ? "true" : "false") << ','
          << round_digits(fine[0].upper) << ',' << round_digits(fine[1].upper) << ',' << continuity << ','
          << (match ? "true" : "false") << '\n';
    }
    landscape.push_back({{"space", space.to_string()},
                         {"darboux_pass", pass_fns},
                         {"continuous_ae", ae_fns},
                         {"scaling_flag", to_string(space.scaling_flag())}});
  }
  Json rep{{"kind", "atlas"},
           {"cells", cells},
           {"landscape", landscape},
           {"matches", matches},
           {"total", cells.size()},
           {"consistent", matches == cells.size()},
           {"eps", number(eps)},
           {"thresholds", numbers(rs)},
           {"upper_small", number(small)}};
  return {rep, csv.str()};
}

CommandOutput execute(const ExperimentConfig& c) {
  CommandOutput out;
  if (c.command == "integrate") out = cmd_integrate(c);
  else if (c.command == "oscillate") out = cmd_oscillate(c);
  else if (c.command == "darboux") out = cmd_darboux(c);
  else if (c.command == "adversary") out = cmd_adversary(c);
  else if (c.command == "ftc") out = cmd_ftc(c);
  else if (c.command == "spacecheck") out = cmd_spacecheck(c);
  else if (c.command == "atlas") out = cmd_atlas(c);
  else throw UsageError("unknown command '" + c.command + "'");
  out.report = Json{{"command", c.command},
                    {"config", to_json(c)},
                    {"seed", c.seed},
                    {"version", std::string(version)},
                    {"report", std::move(out.report)}};
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("cannot write " + path);
}

std::string csv_path(const std::string& out) {
  auto dot = out.rfind('.');
  auto slash = out.rfind('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return out.substr(0, dot) + ".csv";
  return out + ".csv";
}

std::uint64_t env_seed() {
  const char* s = std::getenv("METRIVEC_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  auto v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw UsageError(std::string("METRIVEC_SEED is not an integer: ") + s);
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann integration probes for functions into metric vector spaces", "metrivec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version));

  ExperimentConfig c;
  std::string points;
  double eps = 0, mesh_min = 0, tau = 0;
  std::size_t trunc = 0, samples = 0;
  std::uint64_t seed = 0;
  struct Flags {
    CLI::Option *eps, *mesh_min, *seed, *trunc, *tau, *samples;
  };
  std::vector<std::pair<CLI::App*, Flags>> subs;

  auto add_common = [&](CLI::App* sub) {
    Flags f{};
    sub->add_option("--space", c.space, std::string("codomain: ") + std::string(Space::grammar));
    sub->add_option("--fn", c.fn, std::string("function: ") + std::string(gallery_grammar));
    sub->add_option("--a", c.a, "left end of the interval");
    sub->add_option("--b", c.b, "right end of the interval");
    f.eps = sub->add_option("--eps", eps, "tolerance");
    f.mesh_min = sub->add_option("--mesh-min", mesh_min, "finest mesh (default (b-a)/2^14)");
    sub->add_option("--mesh-levels", c.mesh_levels, "number of halving levels");
    f.seed = sub->add_option("--seed", seed, "seed (default $METRIVEC_SEED or 0)");
    f.trunc = sub->add_option("--trunc", trunc, "truncation M for sequence spaces");
    sub->add_option("--out", c.out, "output path; CSV goes next to it");
    sub->add_option("--format", c.format, "json | csv | both")->check(CLI::IsMember({"json", "csv", "both"}));
    f.samples = sub->add_option("--samples", samples, "samples per level / window");
    f.tau = nullptr;
    return f;
  };

  auto* integrate_cmd = app.add_subcommand("integrate", "estimate the integral over [a, b]");
  subs.emplace_back(integrate_cmd, add_common(integrate_cmd));
  auto* osc = app.add_subcommand("oscillate", "oscillation at points or on a uniform partition");
  subs.emplace_back(osc, add_common(osc));
  osc->add_option("--points", points, "comma-separated points, e.g. 1/3,sqrt(2)/2");
  osc->add_option("--N", c.n, "uniform partition size (oscillation sum)");
  auto* darb = app.add_subcommand("darboux", "Darboux probe along the mesh schedule");
  subs.emplace_back(darb, add_common(darb));
  auto* adv = app.add_subcommand("adversary", "same-points adversary on the uniform N-partition");
  subs.emplace_back(adv, add_common(adv));
  adv->add_option("--r", c.r, "oscillation threshold");
  adv->add_option("--N", c.n, "number of intervals (default 100)");
  auto* ftc = app.add_subcommand("ftc", "integral of F' against F(tau) - F(a)");
  subs.emplace_back(ftc, add_common(ftc));
  subs.back().second.tau = ftc->add_option("--tau", tau, "upper limit (default b)");
  ftc->add_flag("--precheck", c.precheck, "probe continuity of F' first");
  auto* spc = app.add_subcommand("spacecheck", "translation invariance and scaling inequality probes");
  subs.emplace_back(spc, add_common(spc));
  auto* atlas = app.add_subcommand("atlas", "Darboux verdicts and discontinuity brackets per space and function");
  subs.emplace_back(atlas, add_common(atlas));
  atlas->add_option("--grid", c.grid, "finest measure grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    for (auto& [sub, f] : subs) {
      if (!sub->parsed()) continue;
      c.command = sub->get_name();
      if (f.eps->count()) c.eps = eps;
      if (f.mesh_min->count()) c.mesh_min = mesh_min;
      c.seed = f.seed->count() ? seed : env_seed();
      if (f.trunc->count()) c.trunc = trunc;
      if (f.samples->count()) c.samples = samples;
      if (f.tau && f.tau->count()) c.tau = tau;
    }
    c.points = split(points, ',');
    auto result = execute(c);
    const std::string json = dump(result.report);
    const bool want_json = c.format != "csv";
    const bool want_csv = c.format != "json";
    if (c.out.empty()) {
      if (want_json) out << json;
      if (want_csv) out << result.csv;
    } else {
      if (want_json) write_file(c.out, json);
      if (want_csv) write_file(c.format == "csv" ? c.out : csv_path(c.out), result.csv);
    }
    return ExitCode::ok;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return ExitCode::capability;
  } catch (const ConstructionError& e) {
    err << "construction error: " << e.what() << '\n';
    return ExitCode::construction;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return ExitCode::io;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const StructuralError& e) {
    err << "usage error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::failure;
  }
}

}  // namespace metrivec::cli
