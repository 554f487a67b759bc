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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "photonic/basis.hpp"
#include "photonic/dynamics.hpp"
#include "photonic/qstate.hpp"

namespace photonic {

/// A basis element named either by canonical index or by its labels.
/// Resolved against the basis when the step runs.
using ElementRef = std::variant<std::size_t, BasisElement>;

std::size_t resolve(const Basis& b, const ElementRef& ref);

struct Prepare {
  ElementRef element;
};

struct DriveCoupling {
  ElementRef a;
  ElementRef b;
  std::optional<Complex> strength;  // falls back to the EN transition integral
};

/// Switch a laser on for `duration`: the listed pairs are coupled on top of
/// the diagonal levels and the state is propagated. The absorbed photon's
/// wavevector goes into the momentum ledger.
struct LaserOn {
  std::string mode;
  std::optional<Vec3> direction;  // defaults to the mode direction
  std::vector<DriveCoupling> couplings;
  double duration = 0.0;
};

struct DecayChannel {
  ElementRef emit;
  ElementRef target;
  std::optional<std::string> mode;
  std::optional<Vec3> direction;
  Vec3 R;
};

/// Let the clock run. Deterministic runs advance by `duration` (or 1/rate)
/// and never decay. Stochastic runs draw a lifetime from Exp(rate) and fire
/// `decay` when it falls inside the wait.
struct Wait {
  std::optional<double> duration;
  std::optional<double> rate;
  std::optional<DecayChannel> decay;
};

struct Transfer {
  ElementRef from;
  ElementRef to;
  double fraction = 1.0;  // population share moved; 1 empties `from`
};

/// Externally induced transitions, applied in order as unitary two-level
/// rotations. No photon is exchanged with the ledger.
struct InduceTransition {
  std::vector<Transfer> transfers;
};

struct Erase {
  std::vector<ElementRef> elements;
  bool renormalize = false;
};

enum class DirectionRule { mode, explicit_vector, conserve };
enum class Branch { residual, emitted };

/// Spontaneous or induced emission through qstate decohere(). `conserve`
/// sends the photon along the current momentum ledger. Induced emissions
/// into a driving beam are kept as annotations, not emission records.
struct Decohere {
  ElementRef emit;
  ElementRef target;
  std::optional<std::string> mode;
  DirectionRule rule = DirectionRule::mode;
  Vec3 direction;
  Vec3 R;
  Branch branch = Branch::residual;
  bool induced = false;
};

using StepAction = std::variant<Prepare, LaserOn, Wait, InduceTransition, Erase, Decohere>;

struct ProtocolStep {
  std::string label;
  StepAction action;
  std::string note;  // copied into the trace as an annotation
};

std::string kind_name(const StepAction& a);

enum class RunMode { deterministic, stochastic };

struct RunOptions {
  RunMode mode = RunMode::deterministic;
  std::optional<std::uint64_t> seed;
};

struct Annotation {
  std::size_t step = 0;
  std::string text;
};

struct TraceEntry {
  std::size_t step = 0;  // 0 is the initial snapshot; step i is steps[i-1]
  std::string label;
  std::string kind;
  QState state;
  std::vector<EmissionRecord> emissions;  // produced by this step
  std::size_t emission_count = 0;         // cumulative
  Vec3 momentum;                          // absorbed minus emitted so far
  bool finite_lifetime = false;           // support holds an entangled (photon-storing) element
};

struct Trace {
  std::vector<TraceEntry> entries;
  std::vector<EmissionRecord> emissions;
  std::vector<Annotation> annotations;

  const TraceEntry& final() const { return entries.back(); }
};

/// Applies the steps in order. A failing step throws StepError carrying the
/// zero-based step index. Stochastic mode without a seed is invalid_argument.
Trace run(const QState& initial, const std::vector<ProtocolStep>& steps, const RunOptions& opts = {});

/// Zero/nonzero pattern a trace entry must show.
struct TemplateEntry {
  ElementRef element;
  char expect = 'C';  // '1': |amp| == 1, 'C': nonzero, '0': zero
};

struct SupportTemplate {
  std::string label;
  std::size_t entry = 0;  // trace entry index
  bool strict = true;     // elements not listed must be zero
  std::vector<TemplateEntry> entries;
};

struct TemplateMismatch {
  std::string label;
  std::size_t entry = 0;
  std::string detail;
};

std::vector<TemplateMismatch> check_templates(const Trace& trace, const std::vector<SupportTemplate>& templates,
                                              double tol = 1e-10);

}  // namespace photonic
