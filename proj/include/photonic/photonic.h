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

/* C interface to the photonic simulator. All handles are opaque; every call
 * that can fail returns a phot_status and leaves a message for
 * phot_last_error() on the calling thread. Strings handed out through char**
 * are owned by the caller and released with phot_string_free(). */

#ifndef PHOTONIC_PHOTONIC_H
#define PHOTONIC_PHOTONIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(PHOT_BUILDING_LIBRARY)
#define PHOT_API __attribute__((visibility("default")))
#else
#define PHOT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PHOT_OK = 0,
  PHOT_INVALID_ARGUMENT = 1,
  PHOT_PARSE = 2,
  PHOT_PRECONDITION = 3,
  PHOT_NOT_FOUND = 4,
  PHOT_NUMERICAL = 5,
  PHOT_STEP_FAILED = 6,
  PHOT_INTERNAL = 7
} phot_status;

typedef struct phot_basis phot_basis;
typedef struct phot_protocol phot_protocol;
typedef struct phot_trace phot_trace;

typedef struct {
  char mode[64];
  double omega;
  double direction[3];
  double k[3];
  double R[3];
  double re;
  double im;
  size_t source_index;
  size_t target_index;
} phot_emission;

PHOT_API const char* phot_version(void);
PHOT_API const char* phot_status_name(phot_status s);
/* Message of the last failing call on this thread, "" if none. */
PHOT_API const char* phot_last_error(void);
/* Zero-based index of the failing protocol step, -1 when not a step failure. */
PHOT_API long phot_last_error_step(void);
PHOT_API void phot_string_free(char* s);

/* Basis from a registry/partition JSON document. */
PHOT_API phot_status phot_basis_from_config(const char* json, phot_basis** out);
PHOT_API size_t phot_basis_size(const phot_basis* b);
PHOT_API phot_status phot_basis_to_json(const phot_basis* b, char** out);
PHOT_API phot_status phot_basis_ket(const phot_basis* b, size_t index, char** out);
PHOT_API void phot_basis_free(phot_basis* b);

/* Protocol script; base_dir resolves a relative basis_config path (may be NULL). */
PHOT_API phot_status phot_protocol_from_json(const char* json, const char* base_dir, phot_protocol** out);
/* name: "lambda", "halted-light" or "dissociation"; params_json may be NULL. */
PHOT_API phot_status phot_protocol_builtin(const char* name, const char* params_json, phot_protocol** out);
PHOT_API phot_status phot_protocol_to_json(const phot_protocol* p, char** out);
PHOT_API phot_status phot_protocol_templates_json(const phot_protocol* p, char** out);
/* stochastic != 0 selects stochastic waits; has_seed == 0 clears the seed. */
PHOT_API phot_status phot_protocol_set_mode(phot_protocol* p, int stochastic, int has_seed, uint64_t seed);
PHOT_API phot_status phot_protocol_get_mode(const phot_protocol* p, int* stochastic, int* has_seed,
                                           uint64_t* seed);
PHOT_API phot_status phot_protocol_run(const phot_protocol* p, phot_trace** out);
PHOT_API void phot_protocol_free(phot_protocol* p);

PHOT_API phot_status phot_trace_to_csv(const phot_trace* t, char** out);
PHOT_API size_t phot_trace_length(const phot_trace* t);
PHOT_API size_t phot_trace_emission_count(const phot_trace* t);
PHOT_API phot_status phot_trace_emission(const phot_trace* t, size_t i, phot_emission* out);
PHOT_API phot_status phot_trace_momentum(const phot_trace* t, double out[3]);
PHOT_API int phot_trace_finite_lifetime(const phot_trace* t);
/* Compares the trace against templates (NULL: the protocol's own). Writes the
 * mismatch count and, if report != NULL, one line per mismatch. */
PHOT_API phot_status phot_trace_check_templates(const phot_trace* t, const char* templates_json, double tol,
                                                size_t* mismatches, char** report);
PHOT_API void phot_trace_free(phot_trace* t);

/* Four-state secular model; json NULL uses the default parameters.
 * passed is set to 1 unless some claim reports FAIL. */
PHOT_API phot_status phot_secular_report(const char* json, char** csv, int* passed);
PHOT_API phot_status phot_spin_report(char** out);
/* warnings may be NULL; otherwise receives newline-separated warnings. */
PHOT_API phot_status phot_atto_csv(double omega0, double width, double spacing, int harmonics, char** csv,
                                   char** warnings);
PHOT_API phot_status phot_double_slit_csv(double c1_re, double c1_im, double c2_re, double c2_im, double d,
                                          double L, double kappa, int samples, char** csv, double* visibility);

#ifdef __cplusplus
}
#endif

#endif /* PHOTONIC_PHOTONIC_H */
