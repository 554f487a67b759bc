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

#include "photonic/photonic.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "photonic/error.hpp"
#include "photonic/io.hpp"

struct phot_basis {
  std::shared_ptr<const photonic::Basis> basis;
};

struct phot_protocol {
  photonic::Scenario scenario;
  photonic::RunOptions options;
};

struct phot_trace {
  photonic::Trace trace;
  std::vector<photonic::SupportTemplate> templates;
};

namespace {

thread_local std::string g_error;
thread_local long g_error_step = -1;

phot_status status_of(photonic::ErrorKind k) {
  using photonic::ErrorKind;
  switch (k) {
    case ErrorKind::invalid_argument: return PHOT_INVALID_ARGUMENT;
    case ErrorKind::parse: return PHOT_PARSE;
    case ErrorKind::precondition: return PHOT_PRECONDITION;
    case ErrorKind::not_found: return PHOT_NOT_FOUND;
    case ErrorKind::numerical: return PHOT_NUMERICAL;
    case ErrorKind::step_failed: return PHOT_STEP_FAILED;
  }
  return PHOT_INTERNAL;
}

template <class F>
phot_status guard(F&& f) {
  g_error.clear();
  g_error_step = -1;
  try {
    f();
    return PHOT_OK;
  } catch (const photonic::StepError& e) {
    g_error = e.what();
    g_error_step = static_cast<long>(e.step());
    return PHOT_STEP_FAILED;
  } catch (const photonic::Error& e) {
    g_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return PHOT_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return PHOT_INTERNAL;
  }
}

phot_status null_arg(const char* what) {
  g_error = std::string(what) + " must not be NULL";
  g_error_step = -1;
  return PHOT_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* phot_version(void) { return "1.0.0"; }

const char* phot_status_name(phot_status s) {
  switch (s) {
    case PHOT_OK: return "ok";
    case PHOT_INVALID_ARGUMENT: return "invalid argument";
    case PHOT_PARSE: return "parse error";
    case PHOT_PRECONDITION: return "precondition violated";
    case PHOT_NOT_FOUND: return "not found";
    case PHOT_NUMERICAL: return "numerical failure";
    case PHOT_STEP_FAILED: return "protocol step failed";
    case PHOT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* phot_last_error(void) { return g_error.c_str(); }
long phot_last_error_step(void) { return g_error_step; }
void phot_string_free(char* s) { std::free(s); }

phot_status phot_basis_from_config(const char* json, phot_basis** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guard([&] { *out = new phot_basis{photonic::basis_from_config(json)}; });
}

size_t phot_basis_size(const phot_basis* b) { return b ? b->basis->size() : 0; }

phot_status phot_basis_to_json(const phot_basis* b, char** out) {
  if (!b) return null_arg("basis");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(b->basis->to_json()); });
}

phot_status phot_basis_ket(const phot_basis* b, size_t index, char** out) {
  if (!b) return null_arg("basis");
  if (!out) return null_arg("out");
  return guard([&] {
    if (index >= b->basis->size())
      throw photonic::Error(photonic::ErrorKind::not_found, "basis index " + std::to_string(index) + " out of range");
    *out = dup(b->basis->ket(index));
  });
}

void phot_basis_free(phot_basis* b) { delete b; }

phot_status phot_protocol_from_json(const char* json, const char* base_dir, phot_protocol** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guard([&] {
    photonic::Script s = photonic::script_from_json(json, base_dir ? base_dir : "");
    *out = new phot_protocol{photonic::Scenario{"script", s.basis, s.initial, std::move(s.steps), std::move(s.templates)},
                             s.options};
  });
}

phot_status phot_protocol_builtin(const char* name, const char* params_json, phot_protocol** out) {
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  return guard([&] { *out = new phot_protocol{photonic::builtin_scenario(name, params_json ? params_json : ""), {}}; });
}

phot_status phot_protocol_to_json(const phot_protocol* p, char** out) {
  if (!p) return null_arg("protocol");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(photonic::script_to_json(p->scenario, p->options)); });
}

phot_status phot_protocol_templates_json(const phot_protocol* p, char** out) {
  if (!p) return null_arg("protocol");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(photonic::templates_to_json(p->scenario.templates, *p->scenario.basis)); });
}

phot_status phot_protocol_set_mode(phot_protocol* p, int stochastic, int has_seed, uint64_t seed) {
  if (!p) return null_arg("protocol");
  p->options.mode = stochastic ? photonic::RunMode::stochastic : photonic::RunMode::deterministic;
  if (has_seed) p->options.seed = seed;
  else p->options.seed.reset();
  g_error.clear();
  return PHOT_OK;
}

phot_status phot_protocol_get_mode(const phot_protocol* p, int* stochastic, int* has_seed, uint64_t* seed) {
  if (!p) return null_arg("protocol");
  if (stochastic) *stochastic = p->options.mode == photonic::RunMode::stochastic ? 1 : 0;
  if (has_seed) *has_seed = p->options.seed ? 1 : 0;
  if (seed) *seed = p->options.seed.value_or(0);
  g_error.clear();
  return PHOT_OK;
}

phot_status phot_protocol_run(const phot_protocol* p, phot_trace** out) {
  if (!p) return null_arg("protocol");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = new phot_trace{photonic::run(p->scenario.initial, p->scenario.steps, p->options), p->scenario.templates};
  });
}

void phot_protocol_free(phot_protocol* p) { delete p; }

phot_status phot_trace_to_csv(const phot_trace* t, char** out) {
  if (!t) return null_arg("trace");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(photonic::trace_to_csv(t->trace)); });
}

size_t phot_trace_length(const phot_trace* t) { return t ? t->trace.entries.size() : 0; }
size_t phot_trace_emission_count(const phot_trace* t) { return t ? t->trace.emissions.size() : 0; }

phot_status phot_trace_emission(const phot_trace* t, size_t i, phot_emission* out) {
  if (!t) return null_arg("trace");
  if (!out) return null_arg("out");
  return guard([&] {
    if (i >= t->trace.emissions.size())
      throw photonic::Error(photonic::ErrorKind::not_found, "emission " + std::to_string(i) + " out of range");
    const auto& r = t->trace.emissions[i];
    phot_emission e{};
    std::strncpy(e.mode, r.mode.id.c_str(), sizeof e.mode - 1);
    e.omega = r.mode.omega;
    const photonic::Vec3* src[3] = {&r.direction, &r.k, &r.R};
    double* dst[3] = {e.direction, e.k, e.R};
    for (int v = 0; v < 3; ++v) {
      dst[v][0] = src[v]->x;
      dst[v][1] = src[v]->y;
      dst[v][2] = src[v]->z;
    }
    e.re = r.amplitude.real();
    e.im = r.amplitude.imag();
    e.source_index = r.source_index;
    e.target_index = r.target_index;
    *out = e;
  });
}

phot_status phot_trace_momentum(const phot_trace* t, double out[3]) {
  if (!t) return null_arg("trace");
  if (!out) return null_arg("out");
  const auto& m = t->trace.final().momentum;
  out[0] = m.x;
  out[1] = m.y;
  out[2] = m.z;
  g_error.clear();
  return PHOT_OK;
}

int phot_trace_finite_lifetime(const phot_trace* t) { return t && t->trace.final().finite_lifetime ? 1 : 0; }

phot_status phot_trace_check_templates(const phot_trace* t, const char* templates_json, double tol,
                                       size_t* mismatches, char** report) {
  if (!t) return null_arg("trace");
  if (!mismatches) return null_arg("mismatches");
  return guard([&] {
    const auto ts = templates_json ? photonic::templates_from_json(templates_json) : t->templates;
    const auto bad = photonic::check_templates(t->trace, ts, tol);
    *mismatches = bad.size();
    if (report) {
      std::string text;
      for (const auto& m : bad) text += m.label + " (entry " + std::to_string(m.entry) + "): " + m.detail + "\n";
      *report = dup(text);
    }
  });
}

void phot_trace_free(phot_trace* t) { delete t; }

phot_status phot_secular_report(const char* json, char** csv, int* passed) {
  if (!csv) return null_arg("csv");
  return guard([&] {
    photonic::SecularConfig cfg;
    if (json) cfg = photonic::secular_from_json(json);
    else cfg.matrix = photonic::four_state_matrix({});
    const auto rep = photonic::secular_report(cfg);
    *csv = dup(rep.to_csv());
    if (passed) *passed = rep.passed() ? 1 : 0;
  });
}

phot_status phot_spin_report(char** out) {
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(photonic::spin_report()); });
}

phot_status phot_atto_csv(double omega0, double width, double spacing, int harmonics, char** csv, char** warnings) {
  if (!csv) return null_arg("csv");
  return guard([&] {
    const auto a = photonic::attosecond_init({omega0, width, spacing, harmonics, 0.0});
    std::string w;
    for (const auto& s : a.warnings) w += s + "\n";
    *csv = dup(photonic::atto_to_csv(a));
    if (warnings) *warnings = dup(w);
  });
}

phot_status phot_double_slit_csv(double c1_re, double c1_im, double c2_re, double c2_im, double d, double L,
                                 double kappa, int samples, char** csv, double* visibility) {
  if (!csv) return null_arg("csv");
  return guard([&] {
    photonic::SlitGeometry g;
    g.d = d;
    g.L = L;
    g.kappa = kappa;
    g.samples = samples;
    const auto pat = photonic::double_slit_pattern({c1_re, c1_im}, {c2_re, c2_im}, g);
    *csv = dup(photonic::slits_to_csv(pat));
    if (visibility) *visibility = photonic::visibility(pat);
  });
}

}  // extern "C"
