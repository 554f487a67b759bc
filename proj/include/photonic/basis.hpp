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

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "photonic/labels.hpp"

namespace photonic {

/// How a mode occupation combines with the EN part: |j k> (x) |n_w> or |j k; n_w>.
enum class Guise { product, entangled };

/// Incoming/outgoing plane-wave tag. Metadata only.
enum class PhaseTag { none, incoming, outgoing };

struct PhotonSlot {
  std::string mode;
  int n = 0;
  Guise guise = Guise::product;
  auto operator<=>(const PhotonSlot&) const = default;
};

/// One photonic base state. Labels are given per partition block; photon slots
/// are kept in registry mode order once the element belongs to a Basis.
struct BasisElement {
  std::string partition;
  std::vector<ENKey> labels;
  std::vector<PhotonSlot> photons;
  PhaseTag phase = PhaseTag::none;

  auto operator<=>(const BasisElement&) const = default;

  const PhotonSlot* slot(const std::string& mode) const;
  int occupation(const std::string& mode) const;  // 0 when the mode is absent
  bool has_entangled_slot() const;
};

/// Ordered, duplicate-free set of basis elements over one registry.
///
/// Canonical order: partition position, block labels (lexicographic),
/// per-mode occupation (descending, registry mode order), guise (product
/// first), phase tag. Indices are therefore independent of construction order.
class Basis {
 public:
  /// Sorts the elements canonically. Slots missing from an element are not
  /// invented; use complete() for that. Throws on duplicates, unknown labels,
  /// unknown modes, or partitions with differing constituent counts.
  Basis(std::shared_ptr<const Registry> registry, std::vector<PartitionScheme> partitions,
        std::vector<BasisElement> elements, std::optional<int> n_max = std::nullopt);

  std::size_t size() const { return elements_.size(); }
  const BasisElement& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<BasisElement>& elements() const { return elements_; }
  const Registry& registry() const { return *registry_; }
  std::shared_ptr<const Registry> registry_ptr() const { return registry_; }
  const std::vector<PartitionScheme>& partitions() const { return partitions_; }
  const PartitionScheme& partition(const std::string& id) const;
  std::optional<int> n_max() const { return n_max_; }

  /// Zero-based canonical index; throws not_found if e is not in the basis.
  std::size_t index_of(const BasisElement& e) const;
  std::optional<std::size_t> find(const BasisElement& e) const;
  bool contains(const BasisElement& e) const { return find(e).has_value(); }

  /// Fills in vacuum product slots for registry modes the element omits and
  /// orders its slots the way stored elements are ordered.
  BasisElement complete(BasisElement e) const;

  /// Sum of block EN energies plus n * omega over photon slots.
  double level(std::size_t i) const;
  double level_of(const BasisElement& e) const;

  /// Ket in the |labels; entangled> (x) |product> notation.
  std::string ket(std::size_t i) const;

  /// Deterministic JSON listing: index, partition, labels, occupations, guises.
  std::string to_json() const;

  bool same_as(const Basis& other) const;

 private:
  bool canonical_less(const BasisElement& a, const BasisElement& b) const;
  void validate(const BasisElement& e) const;

  std::shared_ptr<const Registry> registry_;
  std::vector<PartitionScheme> partitions_;
  std::vector<BasisElement> elements_;
  std::map<BasisElement, std::size_t> index_;
  std::optional<int> n_max_;
};

/// The four members generated by one EN pair and one mode, in the order
/// root (x) |1>, |root; 1>, excited (x) |0>, |excited; 0>. Elements use a
/// single-block partition named `partition`. Throws when root == excited.
std::vector<BasisElement> fourfold_manifold(const ENLabel& root, const ENLabel& excited,
                                            const ModeLabel& mode,
                                            const std::string& partition = "A");

/// Full cartesian enumeration: partition label tuples x occupations 0..n_max
/// per registry mode x guise per mode.
std::shared_ptr<const Basis> enumerate_basis(std::shared_ptr<const Registry> registry,
                                             std::vector<PartitionScheme> partitions, int n_max);

std::size_t canonical_index(const Basis& basis, const BasisElement& e);

}  // namespace photonic
