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

// Label algebra: radiation modes, photon occupations, electronuclear (EN)
// levels, partition schemes and the registry that ties them together.
// Energies and frequencies share one unit (hbar = 1). Nothing here evolves.

#include <compare>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace photonic {

using Complex = std::complex<double>;

inline constexpr double kResonanceTol = 1e-9;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  Vec3& operator+=(Vec3 o) { return *this = *this + o; }
  Vec3& operator-=(Vec3 o) { return *this = *this - o; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
};

/// A radiation mode: frequency label plus propagation direction. The stored
/// wavevector has magnitude omega (c = 1) so momentum bookkeeping is a plain
/// vector sum.
struct ModeLabel {
  std::string id;
  double omega = 0.0;
  Vec3 k;

  /// Throws invalid_argument unless omega > 0 and the direction is a finite,
  /// non-zero vector. The direction is rescaled to length omega.
  static ModeLabel make(std::string id, double omega, Vec3 direction);

  Vec3 unit_direction() const;
  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// Photon occupation of one mode. n == 0 is the colored vacuum |0_w>.
struct FockLabel {
  ModeLabel mode;
  int n = 0;

  static FockLabel make(ModeLabel mode, int n);
  bool is_vacuum() const { return n == 0; }
};

/// (j, k(j)) pair identifying an EN level inside a registry.
struct ENKey {
  int j = 0;
  int k = 0;
  auto operator<=>(const ENKey&) const = default;
};

struct ENLabel {
  int j = 0;
  int k_sub = 0;
  double energy = 0.0;

  static ENLabel make(int j, int k_sub, double energy);
  ENKey key() const { return {j, k_sub}; }
  friend bool operator==(const ENLabel&, const ENLabel&) = default;
};

/// Ordered partition of constituents 1..m into partite blocks, with the EN
/// labels each block may carry when a basis is enumerated.
struct PartitionScheme {
  std::string id;
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<ENKey>> block_labels;

  /// Validates disjointness and coverage of 1..m; block_labels must have one
  /// non-empty entry per block.
  static PartitionScheme make(std::string id, std::vector<std::vector<int>> blocks,
                              std::vector<std::vector<ENKey>> block_labels);

  int constituent_count() const;
};

/// Hermitian map of EN transition integrals. Absent entries are dark (zero).
class TransitionIntegrals {
 public:
  /// Stores T(a, b) as given. get(b, a) falls back to conj(T(a, b)); pairs
  /// stored in both directions are checked by is_hermitian().
  void set(ENKey a, ENKey b, Complex value);
  Complex get(ENKey a, ENKey b) const;
  bool contains(ENKey a, ENKey b) const;
  bool is_hermitian(double tol = 1e-12) const;
  bool empty() const { return values_.empty(); }
  const std::map<std::pair<ENKey, ENKey>, Complex>& entries() const { return values_; }

 private:
  std::map<std::pair<ENKey, ENKey>, Complex> values_;
};

/// EN levels, modes and transition integrals shared by every basis built on it.
class Registry {
 public:
  Registry() = default;
  Registry(std::vector<ENLabel> levels, std::vector<ModeLabel> modes,
           TransitionIntegrals transitions = {});

  const std::vector<ENLabel>& levels() const { return levels_; }
  const std::vector<ModeLabel>& modes() const { return modes_; }
  const TransitionIntegrals& transitions() const { return transitions_; }

  const ENLabel& level(ENKey key) const;
  bool has_level(ENKey key) const;
  const ModeLabel& mode(const std::string& id) const;
  std::size_t mode_index(const std::string& id) const;
  bool has_mode(const std::string& id) const;

 private:
  std::vector<ENLabel> levels_;
  std::vector<ModeLabel> modes_;
  TransitionIntegrals transitions_;
};

/// True iff |(upper.energy - lower.energy) - mode.omega| <= tol. The first
/// argument is the upper level; the excitation energy is upper minus lower.
bool is_resonant(const ENLabel& upper, const ENLabel& lower, const ModeLabel& mode,
                 double tol = kResonanceTol);

/// EN energy plus sum of n * omega over the listed modes. Zero-point terms are
/// never added. Throws invalid_argument on a repeated mode id.
double photonic_level(const ENLabel& en, std::span<const FockLabel> fock);

}  // namespace photonic
