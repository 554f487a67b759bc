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

// Built-in protocol scripts with their zero/nonzero templates.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "photonic/protocol.hpp"

namespace photonic {

struct Scenario {
  std::string name;
  std::shared_ptr<const Basis> basis;
  QState initial;
  std::vector<ProtocolStep> steps;
  std::vector<SupportTemplate> templates;
};

/// Lambda system: j0 (ground), j2 (lower, dark to j0), j1 (upper).
struct LambdaParams {
  double e1 = 1.0;
  double e2 = 0.6;
  double drive = 1.0;     // laser coupling strength
  double duration = 1.0;  // per laser pulse
  Vec3 k{1.0, 0.0, 0.0};
  Vec3 k_perp{0.0, 1.0, 0.0};
  Vec3 R{0.0, 0.0, 0.0};
};

Scenario lambda_scenario(const LambdaParams& p = {});

/// Storage and revival of a forward pulse. Directions are optional so a
/// missing configuration can be reported instead of guessed.
struct HaltedLightParams {
  double e1 = 1.0;
  double e2 = 0.6;
  double drive = 1.0;
  double duration = 1.0;
  double delay = 5.0;
  bool revival = true;
  std::optional<Vec3> k_forward = Vec3{1.0, 0.0, 0.0};
  std::optional<Vec3> k_plus = Vec3{0.0, 1.0, 0.0};
  std::optional<Vec3> k_minus = Vec3{0.0, -1.0, 0.0};
  Vec3 R{0.0, 0.0, 0.0};
};

Scenario halted_light_scenario(const HaltedLightParams& p = {});

/// One-photon activation followed by one of four outcomes:
/// 1 re-emission, 2 low-frequency emission, 3 0-0 emission, 4 open the B1 channel.
struct DissociationParams {
  int outcome = 1;
  bool drive = true;  // false: prepare the window state and only wait
  double drive_strength = 1.0;
  double duration = 1.0;
  double wait = 10.0;
  Vec3 k_in{0.0, 0.0, 1.0};
  Vec3 R{0.0, 0.0, 0.0};
};

/// Registry and basis used by the dissociation scenario (A0, B1, B2 channels).
std::shared_ptr<const Basis> dissociation_basis();

/// `basis` defaults to dissociation_basis(); a basis lacking the B1 or B2
/// channel partitions is rejected.
Scenario one_photon_dissociation_scenario(const DissociationParams& p = {},
                                          std::shared_ptr<const Basis> basis = nullptr);

struct AttoParams {
  double omega0 = 10.0;
  double width = 0.5;    // Gaussian delta-omega
  double spacing = 0.5;  // comb spacing
  int harmonics = 5;
  double root_energy = 0.0;
};

struct AttoState {
  QState state;
  std::vector<double> omegas;             // comb frequencies, ascending
  std::vector<std::size_t> root_indices;  // basis index of |root; 1_w_n>
  std::vector<std::size_t> excited_indices;
  std::vector<std::string> warnings;
};

/// Gaussian-enveloped comb entangled with the root label; one degenerate
/// excited channel per harmonic with zero amplitude. Normalized.
AttoState attosecond_init(const AttoParams& p);

}  // namespace photonic
