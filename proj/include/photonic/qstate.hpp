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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "photonic/basis.hpp"

namespace photonic {

/// Complex amplitude vector over a fixed basis, plus the protocol clock.
class QState {
 public:
  QState(std::shared_ptr<const Basis> basis, std::vector<Complex> amps, double time_tag = 0.0);

  const Basis& basis() const { return *basis_; }
  std::shared_ptr<const Basis> basis_ptr() const { return basis_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<Complex>& amps() const { return amps_; }
  Complex amp(std::size_t i) const { return amps_.at(i); }
  double time_tag() const { return time_tag_; }

  double norm() const;
  /// Returns a unit-norm copy. Throws numerical on a zero vector.
  QState normalized() const;
  bool is_normalized(double tol = 1e-12) const;

  QState with_amps(std::vector<Complex> amps) const;
  QState advanced(double dt) const;

 private:
  std::shared_ptr<const Basis> basis_;
  std::vector<Complex> amps_;
  double time_tag_ = 0.0;
};

/// Unit amplitude on one element. The element is completed with vacuum
/// product slots for modes it leaves out.
QState window_state(std::shared_ptr<const Basis> basis, const BasisElement& e);
QState window_state(std::shared_ptr<const Basis> basis, std::size_t index);

/// Zeroes the listed amplitudes. Renormalizing a zero result throws.
QState erase(const QState& s, std::span<const std::size_t> indices, bool renormalize = false);

/// Indices with |amp| > tol, ascending.
std::vector<std::size_t> support(const QState& s, double tol = 1e-10);

struct EmissionRecord {
  ModeLabel mode;
  Vec3 direction;  // unit vector
  Vec3 k;          // omega * direction
  Vec3 R;          // detection location
  Complex amplitude;
  std::size_t source_index = 0;
  std::size_t target_index = 0;
  double gap = 0.0;  // level(source) - level(target)
};

struct DecohereOptions {
  std::optional<std::string> mode;  // inferred from the occupation change when absent
  std::optional<Vec3> direction;    // defaults to the mode direction
  Vec3 R;
  double tol = kResonanceTol;
};

struct DecohereResult {
  QState residual;        // the branch where nothing was emitted: source amplitude removed
  EmissionRecord record;
  QState emitted_branch;  // the discharged amplitude sitting on the target element
};

/// Splits off the photon carried by element `emit_index`. `target_index` is
/// the element left behind: same partition and EN labels, one quantum fewer
/// in the emitted mode. |record.amplitude|^2 + |residual|^2 == |s|^2.
DecohereResult decohere(const QState& s, std::size_t emit_index, std::size_t target_index,
                        const DecohereOptions& opts = {});

/// The mode whose occupation drops by one from `from` to `to` with every other
/// occupation unchanged; nullopt if there is no such single mode.
std::optional<std::string> emitted_mode(const BasisElement& from, const BasisElement& to);

}  // namespace photonic
