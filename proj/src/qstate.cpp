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

#include "photonic/qstate.hpp"

#include <algorithm>
#include <cmath>

#include "photonic/error.hpp"

namespace photonic {

QState::QState(std::shared_ptr<const Basis> basis, std::vector<Complex> amps, double time_tag)
    : basis_(std::move(basis)), amps_(std::move(amps)), time_tag_(time_tag) {
  if (!basis_) throw Error(ErrorKind::invalid_argument, "state needs a basis");
  if (amps_.size() != basis_->size())
    throw Error(ErrorKind::invalid_argument, "amplitude vector length " + std::to_string(amps_.size()) +
                                                 " does not match basis size " + std::to_string(basis_->size()));
  for (const auto& a : amps_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw Error(ErrorKind::invalid_argument, "amplitudes must be finite");
  if (!std::isfinite(time_tag_)) throw Error(ErrorKind::invalid_argument, "time tag must be finite");
}

double QState::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

QState QState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorKind::numerical, "cannot normalize a zero state");
  std::vector<Complex> out(amps_);
  for (auto& a : out) a /= n;
  return QState(basis_, std::move(out), time_tag_);
}

bool QState::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

QState QState::with_amps(std::vector<Complex> amps) const {
  return QState(basis_, std::move(amps), time_tag_);
}

QState QState::advanced(double dt) const { return QState(basis_, amps_, time_tag_ + dt); }

QState window_state(std::shared_ptr<const Basis> basis, const BasisElement& e) {
  if (!basis) throw Error(ErrorKind::invalid_argument, "state needs a basis");
  const std::size_t i = basis->index_of(basis->complete(e));
  return window_state(std::move(basis), i);
}

QState window_state(std::shared_ptr<const Basis> basis, std::size_t index) {
  if (!basis) throw Error(ErrorKind::invalid_argument, "state needs a basis");
  if (index >= basis->size())
    throw Error(ErrorKind::not_found, "basis index " + std::to_string(index) + " out of range");
  std::vector<Complex> amps(basis->size());
  amps[index] = 1.0;
  return QState(std::move(basis), std::move(amps));
}

QState erase(const QState& s, std::span<const std::size_t> indices, bool renormalize) {
  std::vector<Complex> amps = s.amps();
  for (std::size_t i : indices) {
    if (i >= amps.size())
      throw Error(ErrorKind::invalid_argument, "erase index " + std::to_string(i) + " out of range");
    amps[i] = 0.0;
  }
  QState out = s.with_amps(std::move(amps));
  return renormalize ? out.normalized() : out;
}

std::vector<std::size_t> support(const QState& s, double tol) {
  if (tol < 0.0) throw Error(ErrorKind::invalid_argument, "support tolerance must be >= 0");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (std::abs(s.amp(i)) > tol) out.push_back(i);
  return out;
}

std::optional<std::string> emitted_mode(const BasisElement& from, const BasisElement& to) {
  std::optional<std::string> found;
  auto check = [&](const std::string& mode) {
    const int d = from.occupation(mode) - to.occupation(mode);
    if (d == 0) return true;
    if (d != 1 || (found && *found != mode)) return false;
    found = mode;
    return true;
  };
  for (const auto& s : from.photons)
    if (!check(s.mode)) return std::nullopt;
  for (const auto& s : to.photons)
    if (!check(s.mode)) return std::nullopt;
  return found;
}

DecohereResult decohere(const QState& s, std::size_t emit_index, std::size_t target_index,
                        const DecohereOptions& opts) {
  const Basis& b = s.basis();
  if (emit_index >= b.size() || target_index >= b.size())
    throw Error(ErrorKind::invalid_argument, "decohere index out of range");
  if (emit_index == target_index)
    throw Error(ErrorKind::precondition, "emitting and target elements coincide");
  const Complex a = s.amp(emit_index);
  if (std::abs(a) <= 1e-10)
    throw Error(ErrorKind::precondition, "element " + b.ket(emit_index) + " is not in the support");

  const BasisElement& src = b.element(emit_index);
  const BasisElement& dst = b.element(target_index);
  if (src.partition != dst.partition || src.labels != dst.labels)
    throw Error(ErrorKind::precondition, "target must keep the EN labels of the emitting element");

  std::string mode_id;
  if (opts.mode) {
    mode_id = *opts.mode;
    b.registry().mode(mode_id);  // throws not_found
  } else if (auto m = emitted_mode(src, dst)) {
    mode_id = *m;
  } else {
    throw Error(ErrorKind::precondition, "no photon available: " + b.ket(emit_index) + " -> " + b.ket(target_index));
  }

  const PhotonSlot* slot = src.slot(mode_id);
  if (!slot || slot->n < 1 || slot->guise != Guise::product)
    throw Error(ErrorKind::precondition,
                "no free " + mode_id + " photon on " + b.ket(emit_index) + " (needs product guise, n >= 1)");
  for (const auto& m : b.registry().modes()) {
    const int want = src.occupation(m.id) - (m.id == mode_id ? 1 : 0);
    if (dst.occupation(m.id) != want)
      throw Error(ErrorKind::precondition, "target occupations do not match a single " + mode_id + " emission");
  }

  const ModeLabel& mode = b.registry().mode(mode_id);
  const double gap = b.level(emit_index) - b.level(target_index);
  if (std::abs(gap - mode.omega) > opts.tol)
    throw Error(ErrorKind::precondition, "emitted omega does not match the discharged gap");

  Vec3 dir = mode.unit_direction();
  if (opts.direction) {
    const double len = opts.direction->norm();
    if (!std::isfinite(len) || len == 0.0)
      throw Error(ErrorKind::invalid_argument, "emission direction must be non-zero");
    dir = (1.0 / len) * *opts.direction;
  }

  EmissionRecord rec;
  rec.mode = mode;
  rec.direction = dir;
  rec.k = mode.omega * dir;
  rec.R = opts.R;
  rec.amplitude = a * std::polar(1.0, rec.k.dot(opts.R));
  rec.source_index = emit_index;
  rec.target_index = target_index;
  rec.gap = gap;

  std::vector<Complex> rest = s.amps();
  rest[emit_index] = 0.0;
  std::vector<Complex> emitted(b.size());
  emitted[target_index] = a;
  return {s.with_amps(std::move(rest)), rec, s.with_amps(std::move(emitted))};
}

}  // namespace photonic
