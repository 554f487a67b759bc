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

#include "photonic/labels.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "photonic/error.hpp"

namespace photonic {

namespace {

std::string key_str(ENKey k) {
  return "(" + std::to_string(k.j) + "," + std::to_string(k.k) + ")";
}

}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

ModeLabel ModeLabel::make(std::string id, double omega, Vec3 direction) {
  if (id.empty()) throw Error(ErrorKind::invalid_argument, "mode id must not be empty");
  if (!std::isfinite(omega) || omega <= 0.0)
    throw Error(ErrorKind::invalid_argument, "mode '" + id + "': omega must be > 0");
  const double len = direction.norm();
  if (!std::isfinite(len) || len == 0.0)
    throw Error(ErrorKind::invalid_argument, "mode '" + id + "': direction must be non-zero");
  ModeLabel m;
  m.id = std::move(id);
  m.omega = omega;
  m.k = (omega / len) * direction;
  return m;
}

Vec3 ModeLabel::unit_direction() const { return (1.0 / omega) * k; }

FockLabel FockLabel::make(ModeLabel mode, int n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "photon number must be >= 0");
  return {std::move(mode), n};
}

ENLabel ENLabel::make(int j, int k_sub, double energy) {
  if (j < 0 || k_sub < 0)
    throw Error(ErrorKind::invalid_argument, "EN quantum numbers must be non-negative");
  if (!std::isfinite(energy))
    throw Error(ErrorKind::invalid_argument, "EN level " + key_str({j, k_sub}) + ": energy must be finite");
  return {j, k_sub, energy};
}

PartitionScheme PartitionScheme::make(std::string id, std::vector<std::vector<int>> blocks,
                                      std::vector<std::vector<ENKey>> block_labels) {
  if (id.empty()) throw Error(ErrorKind::invalid_argument, "partition id must not be empty");
  if (blocks.empty())
    throw Error(ErrorKind::invalid_argument, "partition '" + id + "' has no blocks");
  if (block_labels.size() != blocks.size())
    throw Error(ErrorKind::invalid_argument,
                "partition '" + id + "': need one label list per block");
  std::set<int> seen;
  int total = 0;
  for (const auto& block : blocks) {
    if (block.empty())
      throw Error(ErrorKind::invalid_argument, "partition '" + id + "' has an empty block");
    for (int c : block) {
      if (c < 1)
        throw Error(ErrorKind::invalid_argument,
                    "partition '" + id + "': constituents are numbered from 1");
      if (!seen.insert(c).second)
        throw Error(ErrorKind::invalid_argument, "partition '" + id + "': constituent " +
                                                     std::to_string(c) + " appears twice");
      ++total;
    }
  }
  if (*seen.rbegin() != total)
    throw Error(ErrorKind::invalid_argument,
                "partition '" + id + "': blocks must cover constituents 1.." + std::to_string(total));
  for (const auto& labels : block_labels)
    if (labels.empty())
      throw Error(ErrorKind::invalid_argument, "partition '" + id + "': block without labels");
  return {std::move(id), std::move(blocks), std::move(block_labels)};
}

int PartitionScheme::constituent_count() const {
  int m = 0;
  for (const auto& b : blocks) m += static_cast<int>(b.size());
  return m;
}

void TransitionIntegrals::set(ENKey a, ENKey b, Complex value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw Error(ErrorKind::invalid_argument, "transition integral must be finite");
  values_[{a, b}] = value;
}

Complex TransitionIntegrals::get(ENKey a, ENKey b) const {
  if (auto it = values_.find({a, b}); it != values_.end()) return it->second;
  if (auto it = values_.find({b, a}); it != values_.end()) return std::conj(it->second);
  return {0.0, 0.0};
}

bool TransitionIntegrals::contains(ENKey a, ENKey b) const {
  return values_.count({a, b}) != 0 || values_.count({b, a}) != 0;
}

bool TransitionIntegrals::is_hermitian(double tol) const {
  for (const auto& [pair, v] : values_) {
    if (pair.first == pair.second) {
      if (std::abs(v.imag()) > tol) return false;
      continue;
    }
    auto it = values_.find({pair.second, pair.first});
    if (it != values_.end() && std::abs(it->second - std::conj(v)) > tol) return false;
  }
  return true;
}

Registry::Registry(std::vector<ENLabel> levels, std::vector<ModeLabel> modes,
                   TransitionIntegrals transitions)
    : levels_(std::move(levels)), modes_(std::move(modes)), transitions_(std::move(transitions)) {
  std::set<ENKey> keys;
  for (const auto& l : levels_)
    if (!keys.insert(l.key()).second)
      throw Error(ErrorKind::invalid_argument, "duplicate EN level " + key_str(l.key()));
  std::set<std::string> ids;
  for (const auto& m : modes_)
    if (!ids.insert(m.id).second)
      throw Error(ErrorKind::invalid_argument, "duplicate mode id '" + m.id + "'");
  for (const auto& [pair, v] : transitions_.entries()) {
    (void)v;
    if (!keys.count(pair.first) || !keys.count(pair.second))
      throw Error(ErrorKind::not_found, "coupling references unknown EN level " +
                                            key_str(keys.count(pair.first) ? pair.second : pair.first));
  }
  if (!transitions_.is_hermitian())
    throw Error(ErrorKind::invalid_argument, "transition integrals are not Hermitian");
}

const ENLabel& Registry::level(ENKey key) const {
  for (const auto& l : levels_)
    if (l.key() == key) return l;
  throw Error(ErrorKind::not_found, "unknown EN level " + key_str(key));
}

bool Registry::has_level(ENKey key) const {
  return std::any_of(levels_.begin(), levels_.end(), [&](const ENLabel& l) { return l.key() == key; });
}

const ModeLabel& Registry::mode(const std::string& id) const { return modes_[mode_index(id)]; }

std::size_t Registry::mode_index(const std::string& id) const {
  for (std::size_t i = 0; i < modes_.size(); ++i)
    if (modes_[i].id == id) return i;
  throw Error(ErrorKind::not_found, "unknown mode '" + id + "'");
}

bool Registry::has_mode(const std::string& id) const {
  return std::any_of(modes_.begin(), modes_.end(), [&](const ModeLabel& m) { return m.id == id; });
}

bool is_resonant(const ENLabel& upper, const ENLabel& lower, const ModeLabel& mode, double tol) {
  if (tol < 0.0) throw Error(ErrorKind::invalid_argument, "tolerance must be >= 0");
  return std::abs((upper.energy - lower.energy) - mode.omega) <= tol;
}

double photonic_level(const ENLabel& en, std::span<const FockLabel> fock) {
  double level = en.energy;
  std::set<std::string> ids;
  for (const auto& f : fock) {
    if (!ids.insert(f.mode.id).second)
      throw Error(ErrorKind::invalid_argument, "mode '" + f.mode.id + "' listed twice");
    level += f.n * f.mode.omega;
  }
  return level;
}

}  // namespace photonic
