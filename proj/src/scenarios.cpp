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

#include "photonic/scenarios.hpp"

#include <cmath>

#include "photonic/error.hpp"

namespace photonic {

namespace {

constexpr Guise P = Guise::product;
constexpr Guise E = Guise::entangled;

BasisElement el(const std::string& partition, std::vector<ENKey> labels, std::vector<PhotonSlot> photons) {
  return {partition, std::move(labels), std::move(photons), PhaseTag::none};
}

ProtocolStep step(std::string label, StepAction a, std::string note = {}) {
  return {std::move(label), std::move(a), std::move(note)};
}

SupportTemplate tmpl(std::string label, std::size_t entry, std::vector<TemplateEntry> entries) {
  return {std::move(label), entry, true, std::move(entries)};
}

Vec3 require(const std::optional<Vec3>& v, const char* what) {
  if (!v) throw Error(ErrorKind::invalid_argument, std::string("missing mode configuration: ") + what);
  if (v->norm() == 0.0) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be non-zero");
  return *v;
}

}  // namespace

Scenario lambda_scenario(const LambdaParams& p) {
  const ENKey j0{0, 0}, j1{1, 0}, j2{2, 0};
  if (!(p.e1 > p.e2 && p.e2 > 0.0))
    throw Error(ErrorKind::invalid_argument, "lambda levels need 0 = E(j0) < E(j2) < E(j1)");
  const double w10 = p.e1, w12 = p.e1 - p.e2, w20 = p.e2;
  TransitionIntegrals t;
  t.set(j0, j1, 1.0);
  t.set(j1, j2, 1.0);  // j0 <-> j2 stays dark
  auto reg = std::make_shared<const Registry>(
      std::vector<ENLabel>{ENLabel::make(0, 0, 0.0), ENLabel::make(1, 0, p.e1), ENLabel::make(2, 0, p.e2)},
      std::vector<ModeLabel>{ModeLabel::make("w10", w10, p.k), ModeLabel::make("w12", w12, p.k_perp),
                             ModeLabel::make("w20", w20, p.k)},
      t);
  auto basis = enumerate_basis(reg, {PartitionScheme::make("A", {{1}}, {{j0, j1, j2}})}, 1);

  const auto L1 = el("A", {j0}, {{"w10", 1, P}});
  const auto L2 = el("A", {j0}, {{"w10", 1, E}});
  const auto L3 = el("A", {j1}, {{"w10", 0, P}});
  const auto L4 = el("A", {j1}, {{"w10", 0, E}, {"w12", 0, P}});
  const auto L4x = el("A", {j1}, {{"w10", 0, E}, {"w12", 1, P}});
  const auto L5 = el("A", {j2}, {{"w20", 0, E}, {"w12", 0, P}});
  const auto L5x = el("A", {j2}, {{"w20", 0, E}, {"w12", 1, P}});
  const auto L6 = el("A", {j2}, {{"w20", 0, E}, {"w12", 1, E}});
  const auto L7 = el("A", {j2}, {{"w20", 0, P}, {"w12", 1, P}});
  const auto G2 = el("A", {j2}, {});

  Scenario s{"lambda", basis, window_state(basis, L1), {}, {}};
  s.steps.push_back(step("activate w10", LaserOn{"w10", p.k, {{L1, L2, p.drive}, {L2, L3, p.drive}}, p.duration}));
  s.steps.push_back(step("switch off incoming channel", Erase{{L1}, true}));
  s.steps.push_back(step("second laser w12", LaserOn{"w12", p.k_perp, {{L3, L4x, p.drive}, {L4x, L6, p.drive}}, p.duration}));
  s.steps.push_back(step("induce transition", InduceTransition{{{L2, L5}, {L3, L5}, {L4x, L7}, {L6, L7}}}));
  s.steps.push_back(step("emission root", InduceTransition{{{L5, L7}}}));
  Decohere d;
  d.emit = L7;
  d.target = G2;
  d.rule = DirectionRule::explicit_vector;
  d.direction = p.k_perp;
  d.R = p.R;
  d.branch = Branch::emitted;
  s.steps.push_back(step("spontaneous emission", d));

  s.templates = {
      tmpl("4a", 0, {{L1, '1'}, {L2, '0'}, {L3, '0'}, {L4, '0'}, {L5, '0'}, {L6, '0'}, {L7, '0'}}),
      tmpl("4b", 2, {{L1, '0'}, {L2, 'C'}, {L3, 'C'}, {L4, '0'}, {L5, '0'}, {L6, '0'}, {L7, '0'}}),
      tmpl("4c", 3, {{L1, '0'}, {L2, 'C'}, {L3, 'C'}, {L4x, 'C'}, {L5x, '0'}, {L6, 'C'}, {L7, '0'}}),
      tmpl("4d", 4, {{L1, '0'}, {L2, '0'}, {L3, '0'}, {L4, '0'}, {L5, 'C'}, {L6, '0'}, {L7, 'C'}}),
      tmpl("4e", 5, {{L1, '0'}, {L2, '0'}, {L3, '0'}, {L4, '0'}, {L5, '0'}, {L6, '0'}, {L7, '1'}}),
      tmpl("4f", 6, {{L1, '0'}, {L2, '0'}, {L3, '0'}, {L4, '0'}, {L5, '0'}, {L7, '0'}, {G2, '1'}}),
  };
  return s;
}

Scenario halted_light_scenario(const HaltedLightParams& p) {
  const Vec3 kf = require(p.k_forward, "k_forward");
  const Vec3 kp = require(p.k_plus, "k_plus");
  const Vec3 km = p.revival ? require(p.k_minus, "k_minus") : Vec3{};
  const ENKey j0{0, 0}, j1{1, 0}, j2{2, 0};
  if (!(p.e1 > p.e2 && 2.0 * p.e2 > p.e1))
    throw Error(ErrorKind::invalid_argument, "halted-light levels need E(j1) - E(j2) < E(j2) < E(j1)");
  const double w20 = p.e2, w12 = p.e1 - p.e2;
  auto reg = std::make_shared<const Registry>(
      std::vector<ENLabel>{ENLabel::make(0, 0, 0.0), ENLabel::make(1, 0, p.e1), ENLabel::make(2, 0, p.e2)},
      std::vector<ModeLabel>{ModeLabel::make("w20", w20, kf), ModeLabel::make("w12", w12, kp),
                             ModeLabel::make("v", w20 - w12, kf)});
  auto basis = enumerate_basis(reg, {PartitionScheme::make("A", {{1}}, {{j0, j1, j2}})}, 1);

  const auto a1 = el("A", {j0}, {{"w20", 1, P}});
  const auto a2 = el("A", {j0}, {{"w20", 1, E}});
  const auto b3 = el("A", {j1}, {{"w20", 0, P}});
  const auto b4 = el("A", {j1}, {{"w20", 0, E}});
  const auto a3 = el("A", {j1}, {{"w12", 1, P}});
  const auto a4 = el("A", {j1}, {{"w12", 1, E}});
  const auto a5 = el("A", {j0}, {{"v", 1, P}});
  const auto a6 = el("A", {j0}, {{"v", 1, E}});
  const auto a7 = el("A", {j2}, {{"w20", 0, E}, {"w12", 1, P}});
  const auto G = el("A", {j2}, {});
  const auto a9 = el("A", {j2}, {{"w20", 0, E}, {"w12", 1, E}});
  const auto a10 = el("A", {j2}, {{"w20", 0, P}, {"w12", 1, P}});
  const auto j2w12 = el("A", {j2}, {{"w12", 1, E}});
  const auto ground = el("A", {j0}, {});

  Scenario s{"halted-light", basis, window_state(basis, a1), {}, {}};
  s.steps.push_back(step("forward pulse", LaserOn{"w20", kf, {{a1, a2, p.drive}}, p.duration}));
  s.steps.push_back(step("store", InduceTransition{{{a1, b4}}}));
  s.steps.push_back(step("delay", Wait{p.delay, std::nullopt, std::nullopt}));
  s.steps.push_back(step("laser w12 along k+", LaserOn{"w12", kp, {{b4, a4, p.drive}, {a2, a7, p.drive}}, p.duration}));
  s.steps.push_back(step("dark transfer", InduceTransition{{{b4, a4}, {a2, a7}, {a7, G, 0.5}}},
                         "k+ pass carries one photon in excess"));
  s.steps.push_back(step("hold", Wait{p.delay, std::nullopt, std::nullopt}));

  const std::vector<TemplateEntry> pattern_a = {{a1, '1'}, {a2, '0'}, {a3, '0'}, {a4, '0'}, {a5, '0'}, {a6, '0'},
                                                {a7, '0'}, {G, '0'},  {a9, '0'}, {a10, '0'}};
  const std::vector<TemplateEntry> pattern_d = {{a1, '0'}, {a2, '0'}, {a3, '0'}, {a4, 'C'}, {a5, '0'},
                                                {a6, '0'}, {a7, 'C'}, {G, 'C'},  {a9, '0'}, {a10, '0'}};
  s.templates = {
      tmpl("5a", 0, pattern_a),
      tmpl("5b", 1, {{a1, 'C'}, {a2, 'C'}, {b3, '0'}, {b4, '0'}, {a5, '0'}, {a6, '0'}, {a7, '0'}, {G, '0'},
                     {a9, '0'}, {a10, '0'}}),
      tmpl("5c", 2, {{a1, '0'}, {a2, 'C'}, {b3, '0'}, {b4, 'C'}, {a5, '0'}, {a6, '0'}, {a7, '0'}, {G, '0'},
                     {a9, '0'}, {a10, '0'}}),
      tmpl("5d", 5, pattern_d),
      tmpl("5d held", 6, pattern_d),
  };
  if (!p.revival) return s;

  s.steps.push_back(step("emission root", InduceTransition{{{a4, a10}, {a7, a10}, {G, a10}}}));
  Decohere induced;
  induced.emit = a10;
  induced.target = G;
  induced.rule = DirectionRule::explicit_vector;
  induced.direction = kp;
  induced.R = p.R;
  induced.branch = Branch::emitted;
  induced.induced = true;
  s.steps.push_back(step("induced emission into k+", induced));
  s.steps.push_back(step("laser w12 along k-", LaserOn{"w12", km, {{G, a6, p.drive}}, p.duration}));
  s.steps.push_back(step("up-conversion", InduceTransition{{{G, a6}, {a6, a1}}}));
  Decohere flash;
  flash.emit = a1;
  flash.target = ground;
  flash.rule = DirectionRule::conserve;
  flash.R = p.R;
  s.steps.push_back(step("revival flash", flash));

  s.templates.push_back(tmpl("5e", 7, {{a1, '0'}, {a2, '0'}, {a3, '0'}, {a4, '0'}, {a5, '0'}, {a6, '0'}, {a7, '0'},
                                       {G, '0'}, {a9, '0'}, {a10, '1'}}));
  s.templates.push_back(tmpl("5e'", 8, {{a1, '0'}, {a2, '0'}, {a3, '0'}, {a4, '0'}, {j2w12, '0'}, {G, '1'}}));
  s.templates.push_back(tmpl("5a revived", 10, pattern_a));
  s.templates.push_back(tmpl("flash", 11, {{a1, '0'}, {ground, '0'}}));
  return s;
}

namespace {

const ENKey kGround{0, 0}, kLow{1, 0}, kChrStar{1, 1};
const ENKey kB1a{2, 0}, kB1aStar{2, 1}, kB1b{3, 0};
const ENKey kB2a{4, 0}, kB2b{5, 0}, kB2bStar{5, 1};

}  // namespace

std::shared_ptr<const Basis> dissociation_basis() {
  const double e_low = 4.0, e_star = 4.3;
  auto reg = std::make_shared<const Registry>(
      std::vector<ENLabel>{ENLabel::make(0, 0, 0.0), ENLabel::make(1, 0, e_low), ENLabel::make(1, 1, e_star),
                           ENLabel::make(2, 0, 1.5), ENLabel::make(2, 1, 2.5), ENLabel::make(3, 0, 1.0),
                           ENLabel::make(4, 0, 1.2), ENLabel::make(5, 0, 1.8), ENLabel::make(5, 1, 3.1)},
      std::vector<ModeLabel>{ModeLabel::make("w", e_star, {0.0, 0.0, 1.0}),
                             ModeLabel::make("w_low", e_star - e_low, {0.0, 0.0, 1.0}),
                             ModeLabel::make("w00", e_low, {0.0, 0.0, 1.0})});
  std::vector<PartitionScheme> parts{
      PartitionScheme::make("A0", {{1, 2, 3}}, {{kGround, kLow, kChrStar}}),
      PartitionScheme::make("B1", {{1, 2}, {3}}, {{kB1a, kB1aStar}, {kB1b}}),
      PartitionScheme::make("B2", {{1}, {2, 3}}, {{kB2a}, {kB2b, kB2bStar}}),
  };
  return enumerate_basis(reg, parts, 1);
}

Scenario one_photon_dissociation_scenario(const DissociationParams& p, std::shared_ptr<const Basis> basis) {
  if (!basis) basis = dissociation_basis();
  for (const char* id : {"A0", "B1", "B2"}) {
    bool found = false;
    for (const auto& part : basis->partitions()) found = found || part.id == id;
    if (!found)
      throw Error(ErrorKind::precondition, std::string("dissociation needs channel partition '") + id + "'");
  }
  if (p.outcome < 1 || p.outcome > 4) throw Error(ErrorKind::invalid_argument, "outcome must be 1..4");

  const auto D1 = el("A0", {kGround}, {{"w", 1, P}});
  const auto D2 = el("A0", {kGround}, {{"w", 1, E}});
  const auto ground = el("A0", {kGround}, {});
  const auto B1s = el("B1", {kB1aStar, kB1b}, {});
  const auto B1g = el("B1", {kB1a, kB1b}, {});
  const auto B2s = el("B2", {kB2a, kB2bStar}, {});

  Scenario s{"dissociation", basis, window_state(basis, D1), {}, {}};
  if (!p.drive) {
    s.name = "dissociation-idle";
    s.steps.push_back(step("no drive", Wait{p.wait, std::nullopt, std::nullopt}));
    s.steps.push_back(step("still no drive", Wait{p.wait, std::nullopt, std::nullopt}));
    for (std::size_t i = 0; i < 3; ++i)
      s.templates.push_back(tmpl("6a idle " + std::to_string(i), i, {{D1, '1'}, {D2, '0'}, {B1s, '0'}, {B2s, '0'}}));
    return s;
  }

  s.steps.push_back(step("activation", LaserOn{"w", p.k_in, {{D1, D2, p.drive_strength}}, p.duration}));
  s.steps.push_back(step("vacuum information suppressed", InduceTransition{{{D1, B1s, 0.5}, {D1, B2s}}}));
  s.templates = {
      tmpl("6a", 0, {{D1, '1'}, {D2, '0'}, {B1s, '0'}, {B2s, '0'}}),
      tmpl("6b", 1, {{D1, 'C'}, {D2, 'C'}, {B1s, '0'}, {B2s, '0'}}),
      tmpl("6b'", 2, {{D1, '0'}, {D2, 'C'}, {B1s, 'C'}, {B2s, 'C'}}),
  };

  auto emit_via = [&](const BasisElement& carrier, const BasisElement& rest, const std::string& label) {
    s.steps.push_back(step("collect", InduceTransition{{{B1s, carrier}, {B2s, carrier}, {D2, carrier}}}));
    Decohere d;
    d.emit = carrier;
    d.target = rest;
    d.R = p.R;
    d.branch = Branch::emitted;
    s.steps.push_back(step(label, d));
    s.templates.push_back(tmpl("outcome " + std::to_string(p.outcome), 4, {{rest, '1'}, {carrier, '0'}}));
  };

  switch (p.outcome) {
    case 1:
      emit_via(D1, ground, "re-emission");
      break;
    case 2:
      emit_via(el("A0", {kLow}, {{"w_low", 1, P}}), el("A0", {kLow}, {}), "low-frequency emission");
      break;
    case 3:
      emit_via(el("A0", {kGround}, {{"w00", 1, P}}), ground, "0-0 emission");
      break;
    case 4:
      s.steps.push_back(step("open B1 coupling", InduceTransition{{{B1s, B1g, 0.5}}}));
      s.templates.push_back(tmpl("outcome 4", 3, {{D2, 'C'}, {B1s, 'C'}, {B1g, 'C'}, {B2s, 'C'}}));
      break;
  }
  return s;
}

AttoState attosecond_init(const AttoParams& p) {
  if (!(p.width > 0.0) || !std::isfinite(p.width)) throw Error(ErrorKind::invalid_argument, "width must be > 0");
  if (p.harmonics < 1) throw Error(ErrorKind::invalid_argument, "need at least one harmonic");
  if (p.harmonics > 1 && (!(p.spacing > 0.0) || !std::isfinite(p.spacing)))
    throw Error(ErrorKind::invalid_argument, "comb spacing must be > 0");
  if (!std::isfinite(p.omega0) || !std::isfinite(p.root_energy))
    throw Error(ErrorKind::invalid_argument, "comb center and root energy must be finite");

  std::vector<std::string> warnings;
  std::vector<double> omegas;
  if (p.width >= p.omega0 / 10.0)
    warnings.push_back("width is not much smaller than omega0 (needs width < omega0/10)");

  const int n = p.harmonics;
  std::vector<ENLabel> levels{ENLabel::make(0, 0, p.root_energy)};
  std::vector<ModeLabel> modes;
  std::vector<ENKey> labels{{0, 0}};
  for (int s = 0; s < n; ++s) {
    const double w = p.omega0 + (s - (n - 1) / 2.0) * p.spacing;
    if (!(w > 0.0)) throw Error(ErrorKind::invalid_argument, "comb frequency " + std::to_string(s) + " is not positive");
    omegas.push_back(w);
    modes.push_back(ModeLabel::make("h" + std::to_string(s), w, {0.0, 0.0, 1.0}));
    levels.push_back(ENLabel::make(1, s, p.root_energy + w));  // excited channel resonant with harmonic s
    labels.push_back({1, s});
  }
  auto reg = std::make_shared<const Registry>(levels, modes);
  std::vector<BasisElement> elements;
  for (int s = 0; s < n; ++s) {
    const std::string id = "h" + std::to_string(s);
    elements.push_back(el("A", {{0, 0}}, {{id, 1, E}}));
    elements.push_back(el("A", {{1, s}}, {{id, 0, E}}));
  }
  auto basis = std::make_shared<const Basis>(reg, std::vector<PartitionScheme>{PartitionScheme::make("A", {{1}}, {labels})},
                                             elements);
  std::vector<Complex> amps(basis->size());
  std::vector<std::size_t> roots, excited;
  for (int s = 0; s < n; ++s) {
    const std::size_t r = basis->index_of(elements[2 * s]);
    const double off = omegas[s] - p.omega0;
    amps[r] = std::exp(-off * off / (2.0 * p.width * p.width));
    roots.push_back(r);
    excited.push_back(basis->index_of(elements[2 * s + 1]));
  }
  return {QState(basis, amps).normalized(), std::move(omegas), std::move(roots), std::move(excited),
          std::move(warnings)};
}

}  // namespace photonic
