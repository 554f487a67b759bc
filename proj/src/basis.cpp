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

#include "photonic/basis.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "photonic/error.hpp"

namespace photonic {

const PhotonSlot* BasisElement::slot(const std::string& mode) const {
  for (const auto& s : photons)
    if (s.mode == mode) return &s;
  return nullptr;
}

int BasisElement::occupation(const std::string& mode) const {
  const PhotonSlot* s = slot(mode);
  return s ? s->n : 0;
}

bool BasisElement::has_entangled_slot() const {
  return std::any_of(photons.begin(), photons.end(),
                     [](const PhotonSlot& s) { return s.guise == Guise::entangled; });
}

Basis::Basis(std::shared_ptr<const Registry> registry, std::vector<PartitionScheme> partitions,
             std::vector<BasisElement> elements, std::optional<int> n_max)
    : registry_(std::move(registry)),
      partitions_(std::move(partitions)),
      elements_(std::move(elements)),
      n_max_(n_max) {
  if (!registry_) throw Error(ErrorKind::invalid_argument, "basis needs a registry");
  if (partitions_.empty()) throw Error(ErrorKind::invalid_argument, "basis needs at least one partition");
  std::set<std::string> ids;
  for (const auto& p : partitions_) {
    if (!ids.insert(p.id).second)
      throw Error(ErrorKind::invalid_argument, "duplicate partition id '" + p.id + "'");
    if (p.constituent_count() != partitions_.front().constituent_count())
      throw Error(ErrorKind::invalid_argument,
                  "partition '" + p.id + "' covers a different number of constituents");
    for (const auto& labels : p.block_labels)
      for (ENKey k : labels)
        if (!registry_->has_level(k))
          throw Error(ErrorKind::not_found, "partition '" + p.id + "' references unknown EN level (" +
                                                std::to_string(k.j) + "," + std::to_string(k.k) + ")");
  }
  for (auto& e : elements_) {
    validate(e);
    std::sort(e.photons.begin(), e.photons.end(), [&](const PhotonSlot& a, const PhotonSlot& b) {
      return registry_->mode_index(a.mode) < registry_->mode_index(b.mode);
    });
  }
  std::sort(elements_.begin(), elements_.end(),
            [this](const BasisElement& a, const BasisElement& b) { return canonical_less(a, b); });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second)
      throw Error(ErrorKind::invalid_argument, "duplicate basis element " + ket(i));
  }
}

void Basis::validate(const BasisElement& e) const {
  const PartitionScheme& p = partition(e.partition);
  if (e.labels.size() != p.blocks.size())
    throw Error(ErrorKind::invalid_argument,
                "element in partition '" + p.id + "' needs one label per block");
  for (ENKey k : e.labels)
    if (!registry_->has_level(k))
      throw Error(ErrorKind::not_found, "element references unknown EN level (" + std::to_string(k.j) +
                                            "," + std::to_string(k.k) + ")");
  std::set<std::string> modes;
  for (const auto& s : e.photons) {
    registry_->mode_index(s.mode);
    if (s.n < 0) throw Error(ErrorKind::invalid_argument, "negative photon number");
    if (!modes.insert(s.mode).second)
      throw Error(ErrorKind::invalid_argument, "mode '" + s.mode + "' appears twice in one element");
  }
}

const PartitionScheme& Basis::partition(const std::string& id) const {
  for (const auto& p : partitions_)
    if (p.id == id) return p;
  throw Error(ErrorKind::not_found, "unknown partition '" + id + "'");
}

bool Basis::canonical_less(const BasisElement& a, const BasisElement& b) const {
  auto partition_pos = [this](const std::string& id) {
    for (std::size_t i = 0; i < partitions_.size(); ++i)
      if (partitions_[i].id == id) return i;
    return partitions_.size();
  };
  const auto pa = partition_pos(a.partition);
  const auto pb = partition_pos(b.partition);
  if (pa != pb) return pa < pb;
  if (a.labels != b.labels) return a.labels < b.labels;

  // Occupations: registry mode order, larger n first.
  const std::size_t common = std::min(a.photons.size(), b.photons.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto ma = registry_->mode_index(a.photons[i].mode);
    const auto mb = registry_->mode_index(b.photons[i].mode);
    if (ma != mb) return ma < mb;
    if (a.photons[i].n != b.photons[i].n) return a.photons[i].n > b.photons[i].n;
  }
  if (a.photons.size() != b.photons.size()) return a.photons.size() < b.photons.size();
  for (std::size_t i = 0; i < common; ++i)
    if (a.photons[i].guise != b.photons[i].guise) return a.photons[i].guise < b.photons[i].guise;
  return a.phase < b.phase;
}

std::optional<std::size_t> Basis::find(const BasisElement& e) const {
  auto it = index_.find(e);
  if (it != index_.end()) return it->second;
  // Callers may hand in slots in a different order.
  BasisElement sorted = e;
  std::sort(sorted.photons.begin(), sorted.photons.end(), [&](const PhotonSlot& a, const PhotonSlot& b) {
    const bool ka = registry_->has_mode(a.mode), kb = registry_->has_mode(b.mode);
    if (!ka || !kb) return a.mode < b.mode;
    return registry_->mode_index(a.mode) < registry_->mode_index(b.mode);
  });
  it = index_.find(sorted);
  if (it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t Basis::index_of(const BasisElement& e) const {
  if (auto i = find(e)) return *i;
  std::string labels;
  for (ENKey k : e.labels) labels += "(" + std::to_string(k.j) + "," + std::to_string(k.k) + ")";
  throw Error(ErrorKind::not_found, "element " + e.partition + ":" + labels + " is not in the basis");
}

BasisElement Basis::complete(BasisElement e) const {
  for (const auto& m : registry_->modes())
    if (!e.slot(m.id)) e.photons.push_back({m.id, 0, Guise::product});
  std::sort(e.photons.begin(), e.photons.end(), [&](const PhotonSlot& a, const PhotonSlot& b) {
    return registry_->mode_index(a.mode) < registry_->mode_index(b.mode);
  });
  return e;
}

double Basis::level_of(const BasisElement& e) const {
  double level = 0.0;
  for (ENKey k : e.labels) level += registry_->level(k).energy;
  for (const auto& s : e.photons) level += s.n * registry_->mode(s.mode).omega;
  return level;
}

double Basis::level(std::size_t i) const { return level_of(elements_.at(i)); }

std::string Basis::ket(std::size_t i) const {
  const BasisElement& e = elements_.at(i);
  std::string out = e.partition + ":|";
  for (std::size_t b = 0; b < e.labels.size(); ++b) {
    if (b) out += " (x) ";
    out += "j" + std::to_string(e.labels[b].j) + "k" + std::to_string(e.labels[b].k);
  }
  bool first = true;
  for (const auto& s : e.photons) {
    if (s.guise != Guise::entangled) continue;
    out += first ? "; " : " ";
    first = false;
    out += std::to_string(s.n) + "_" + s.mode;
  }
  out += ">";
  for (const auto& s : e.photons)
    if (s.guise == Guise::product) out += " (x) |" + std::to_string(s.n) + "_" + s.mode + ">";
  if (e.phase == PhaseTag::incoming) out += " [in]";
  if (e.phase == PhaseTag::outgoing) out += " [out]";
  return out;
}

std::string Basis::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["size"] = elements_.size();
  doc["n_max"] = n_max_ ? ordered_json(*n_max_) : ordered_json(nullptr);
  ordered_json modes = ordered_json::array();
  for (const auto& m : registry_->modes()) modes.push_back(m.id);
  doc["modes"] = modes;
  ordered_json parts = ordered_json::array();
  for (const auto& p : partitions_) parts.push_back({{"id", p.id}, {"blocks", p.blocks}});
  doc["partitions"] = parts;
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    ordered_json labels = ordered_json::array();
    for (ENKey k : e.labels) labels.push_back({k.j, k.k});
    ordered_json occ = ordered_json::array();
    ordered_json guises = ordered_json::array();
    for (const auto& s : e.photons) {
      occ.push_back({s.mode, s.n});
      guises.push_back({s.mode, s.guise == Guise::product ? "product" : "entangled"});
    }
    ordered_json row = ordered_json::array({i, e.partition, labels, occ, guises});
    if (e.phase != PhaseTag::none) row.push_back(e.phase == PhaseTag::incoming ? "incoming" : "outgoing");
    list.push_back(row);
  }
  doc["elements"] = list;
  return doc.dump(1) + "\n";
}

bool Basis::same_as(const Basis& other) const {
  return this == &other ||
         (elements_ == other.elements_ && registry_->levels() == other.registry_->levels() &&
          registry_->modes() == other.registry_->modes());
}

std::vector<BasisElement> fourfold_manifold(const ENLabel& root, const ENLabel& excited,
                                            const ModeLabel& mode, const std::string& partition) {
  if (root.key() == excited.key())
    throw Error(ErrorKind::invalid_argument, "fourfold manifold needs two distinct EN labels");
  auto make = [&](const ENLabel& en, int n, Guise g) {
    return BasisElement{partition, {en.key()}, {{mode.id, n, g}}, PhaseTag::none};
  };
  return {make(root, 1, Guise::product), make(root, 1, Guise::entangled),
          make(excited, 0, Guise::product), make(excited, 0, Guise::entangled)};
}

std::shared_ptr<const Basis> enumerate_basis(std::shared_ptr<const Registry> registry,
                                             std::vector<PartitionScheme> partitions, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::invalid_argument, "n_max must be >= 0");
  if (partitions.empty()) throw Error(ErrorKind::invalid_argument, "need at least one partition");
  if (!registry) throw Error(ErrorKind::invalid_argument, "basis needs a registry");

  const auto& modes = registry->modes();
  const std::size_t nm = modes.size();
  std::vector<BasisElement> elements;

  for (const auto& p : partitions) {
    // Odometer over the per-block label choices.
    std::vector<std::size_t> pick(p.blocks.size(), 0);
    for (;;) {
      std::vector<ENKey> labels;
      for (std::size_t b = 0; b < pick.size(); ++b) labels.push_back(p.block_labels[b][pick[b]]);

      std::vector<int> occ(nm, 0);
      for (;;) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << nm); ++mask) {
          BasisElement e{p.id, labels, {}, PhaseTag::none};
          for (std::size_t m = 0; m < nm; ++m)
            e.photons.push_back(
                {modes[m].id, occ[m], (mask >> m) & 1U ? Guise::entangled : Guise::product});
          elements.push_back(std::move(e));
        }
        std::size_t m = 0;
        while (m < nm && occ[m] == n_max) occ[m++] = 0;
        if (m == nm) break;
        ++occ[m];
      }

      std::size_t b = 0;
      while (b < pick.size() && pick[b] + 1 == p.block_labels[b].size()) pick[b++] = 0;
      if (b == pick.size()) break;
      ++pick[b];
    }
  }
  return std::make_shared<const Basis>(std::move(registry), std::move(partitions), std::move(elements),
                                       n_max);
}

std::size_t canonical_index(const Basis& basis, const BasisElement& e) { return basis.index_of(e); }

}  // namespace photonic
