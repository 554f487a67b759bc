// Copyright 2026 The Photonic Basis Authors
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

// Command-line frontend. Talks to the library through the C interface only.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "photonic/photonic.h"

namespace fs = std::filesystem;

namespace {

// Exit codes: 0 ok/match, 1 template or claim mismatch, 2 input error, 3 step failure.
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kStepFailure = 3;

struct Failure {
  int code;
  std::string message;
};

struct Owned {
  char* p = nullptr;
  ~Owned() { phot_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

void check(phot_status s) {
  if (s == PHOT_OK) return;
  std::string msg = phot_last_error();
  if (s == PHOT_STEP_FAILED) throw Failure{kStepFailure, msg};
  throw Failure{kInputError, msg};
}

fs::path locate(const std::string& name) {
  fs::path p(name);
  if (fs::exists(p) || p.is_absolute()) return p;
  if (const char* dir = std::getenv("PHOTONIC_CONFIG_DIR")) {
    fs::path alt = fs::path(dir) / p;
    if (fs::exists(alt)) return alt;
  }
  return p;
}

std::string slurp(const std::string& name) {
  const fs::path p = locate(name);
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Failure{kInputError, "cannot read '" + name + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Failure{kInputError, "cannot write '" + out + "'"};
  f << text;
}

struct Common {
  std::string out;
  double tol = 1e-10;
  std::optional<std::uint64_t> seed;
  std::string mode;  // empty: keep what the script says
  std::string expect;
};

int cmd_basis(const std::string& config, const Common& c) {
  phot_basis* b = nullptr;
  check(phot_basis_from_config(slurp(config).c_str(), &b));
  std::unique_ptr<phot_basis, void (*)(phot_basis*)> hold(b, phot_basis_free);
  Owned listing;
  check(phot_basis_to_json(b, &listing.p));
  emit(listing.str(), c.out);
  (c.out.empty() ? std::cerr : std::cout) << "elements: " << phot_basis_size(b) << "\n";
  return 0;
}

struct RunArgs {
  std::string script;
  std::string builtin;
  std::string params;
  std::string export_script;
  std::string export_template;
};

int cmd_run(const RunArgs& a, const Common& c) {
  if (a.script.empty() == a.builtin.empty()) throw Failure{kInputError, "give either a script file or --builtin"};
  if (!c.mode.empty() && c.mode != "deterministic" && c.mode != "stochastic")
    throw Failure{kInputError, "--mode must be deterministic or stochastic"};
  if (!(c.tol >= 0.0)) throw Failure{kInputError, "--tol must be >= 0"};

  phot_protocol* p = nullptr;
  if (!a.builtin.empty()) {
    check(phot_protocol_builtin(a.builtin.c_str(), a.params.empty() ? nullptr : a.params.c_str(), &p));
  } else {
    const fs::path path = locate(a.script);
    check(phot_protocol_from_json(slurp(a.script).c_str(), path.parent_path().string().c_str(), &p));
  }
  std::unique_ptr<phot_protocol, void (*)(phot_protocol*)> hold(p, phot_protocol_free);

  // Flags override the script's mode and seed only when given.
  int stochastic = 0, has_seed = 0;
  std::uint64_t seed = 0;
  check(phot_protocol_get_mode(p, &stochastic, &has_seed, &seed));
  if (!c.mode.empty()) stochastic = c.mode == "stochastic" ? 1 : 0;
  if (c.seed) {
    has_seed = 1;
    seed = *c.seed;
  }
  if (stochastic && !has_seed) throw Failure{kInputError, "stochastic mode needs --seed"};
  check(phot_protocol_set_mode(p, stochastic, has_seed, seed));

  if (!a.export_script.empty()) {
    Owned js;
    check(phot_protocol_to_json(p, &js.p));
    emit(js.str(), a.export_script);
  }
  if (!a.export_template.empty()) {
    Owned js;
    check(phot_protocol_templates_json(p, &js.p));
    emit(js.str(), a.export_template);
  }

  phot_trace* t = nullptr;
  check(phot_protocol_run(p, &t));
  std::unique_ptr<phot_trace, void (*)(phot_trace*)> hold_t(t, phot_trace_free);
  Owned csv;
  check(phot_trace_to_csv(t, &csv.p));
  emit(csv.str(), c.out);

  if (c.expect.empty()) return 0;
  size_t bad = 0;
  Owned report;
  if (c.expect == "builtin") {
    check(phot_trace_check_templates(t, nullptr, c.tol, &bad, &report.p));
  } else {
    check(phot_trace_check_templates(t, slurp(c.expect).c_str(), c.tol, &bad, &report.p));
  }
  std::ostream& log = c.out.empty() ? std::cerr : std::cout;
  if (bad == 0) {
    log << "templates: match\n";
    return 0;
  }
  log << "templates: " << bad << " mismatch(es)\n" << report.str();
  return kMismatch;
}

int cmd_secular(const std::string& config, const Common& c) {
  Owned csv;
  int passed = 0;
  if (config.empty()) check(phot_secular_report(nullptr, &csv.p, &passed));
  else check(phot_secular_report(slurp(config).c_str(), &csv.p, &passed));
  emit(csv.str(), c.out);
  return passed ? 0 : kMismatch;
}

int cmd_spin(const Common& c) {
  Owned text;
  check(phot_spin_report(&text.p));
  emit(text.str(), c.out);
  return 0;
}

struct AttoArgs {
  double omega0 = 10.0, width = 0.5, spacing = 0.5;
  int harmonics = 5;
};

int cmd_atto(const AttoArgs& a, const Common& c) {
  Owned csv, warn;
  check(phot_atto_csv(a.omega0, a.width, a.spacing, a.harmonics, &csv.p, &warn.p));
  if (!warn.str().empty()) std::cerr << "warning: " << warn.str();
  emit(csv.str(), c.out);
  return 0;
}

struct SlitArgs {
  std::vector<double> c1{0.7071067811865476, 0.0}, c2{0.7071067811865476, 0.0};
  double d = 1.0, L = 100.0, kappa = 20.0;
  int samples = 201;
};

int cmd_slits(const SlitArgs& a, const Common& c) {
  Owned csv;
  double vis = 0.0;
  check(phot_double_slit_csv(a.c1[0], a.c1[1], a.c2[0], a.c2[1], a.d, a.L, a.kappa, a.samples, &csv.p, &vis));
  emit(csv.str(), c.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photonic: photon/electronuclear basis simulator"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the main output here instead of stdout");
    sub->add_option("--tol", common.tol, "Zero tolerance for template checks");
    sub->add_option("--seed", common.seed, "Seed for stochastic runs");
    sub->add_option("--mode", common.mode, "deterministic or stochastic");
    sub->add_option("--expect", common.expect, "Template file to compare against (or 'builtin')");
  };

  std::string basis_config;
  auto* basis = app.add_subcommand("basis", "Enumerate a basis from a registry file");
  basis->add_option("config", basis_config, "Registry/partition JSON")->required();
  add_common(basis);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a protocol script or a built-in scenario");
  run->add_option("script", run_args.script, "Protocol script JSON");
  run->add_option("--builtin", run_args.builtin, "lambda, halted-light or dissociation");
  run->add_option("--params", run_args.params, "JSON object overriding built-in parameters");
  run->add_option("--export-script", run_args.export_script, "Write the script being run as JSON");
  run->add_option("--export-template", run_args.export_template, "Write the scenario's templates as JSON");
  add_common(run);

  std::string secular_config;
  auto* secular = app.add_subcommand("secular", "Solve the four-state secular model");
  secular->add_option("config", secular_config, "Parameter JSON (defaults when omitted)");
  add_common(secular);

  auto* spin = app.add_subcommand("spin", "Print singlet and triplet constructions");
  add_common(spin);

  AttoArgs atto_args;
  auto* atto = app.add_subcommand("atto", "Gaussian comb initial state");
  atto->add_option("--omega0", atto_args.omega0, "Comb centre frequency")->capture_default_str();
  atto->add_option("--width", atto_args.width, "Gaussian width")->capture_default_str();
  atto->add_option("--spacing", atto_args.spacing, "Comb spacing")->capture_default_str();
  atto->add_option("--harmonics", atto_args.harmonics, "Number of comb members")->capture_default_str();
  add_common(atto);

  SlitArgs slit_args;
  auto* slits = app.add_subcommand("slits", "Two-path interference pattern");
  slits->add_option("--c1", slit_args.c1, "re im")->expected(2);
  slits->add_option("--c2", slit_args.c2, "re im")->expected(2);
  slits->add_option("--d", slit_args.d, "Slit separation")->capture_default_str();
  slits->add_option("--L", slit_args.L, "Screen distance")->capture_default_str();
  slits->add_option("--kappa", slit_args.kappa, "Wavenumber")->capture_default_str();
  slits->add_option("--samples", slit_args.samples, "Screen points (odd)")->capture_default_str();
  add_common(slits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*basis) return cmd_basis(basis_config, common);
    if (*run) return cmd_run(run_args, common);
    if (*secular) return cmd_secular(secular_config, common);
    if (*spin) return cmd_spin(common);
    if (*atto) return cmd_atto(atto_args, common);
    if (*slits) return cmd_slits(slit_args, common);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kInputError;
}
