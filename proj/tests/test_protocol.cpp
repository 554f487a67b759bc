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

#include <doctest.h>

#include <cmath>
#include <functional>

#include "photonic/error.hpp"
#include "photonic/protocol.hpp"
#include "photonic/scenarios.hpp"

using namespace photonic;

namespace {

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

BasisElement el(const std::string& part, std::vector<ENKey> labels, std::vector<PhotonSlot> photons) {
  return {part, std::move(labels), std::move(photons), PhaseTag::none};
}

double dist(Vec3 a, Vec3 b) { return (a - b).norm(); }

bool entangled_with(const Basis& b, std::size_t i, const std::string& mode) {
  const PhotonSlot* s = b.element(i).slot(mode);
  return s && s->guise == Guise::entangled;
}

ProtocolStep wait_step(std::optional<double> duration, std::optional<double> rate,
                       std::optional<DecayChannel> decay = std::nullopt) {
  return {"wait", Wait{duration, rate, std::move(decay)}, {}};
}

}  // namespace

TEST_CASE("empty protocol leaves only the initial snapshot") {
  const auto sc = lambda_scenario();
  const Trace t = run(sc.initial, {});
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].step == 0);
  CHECK(t.entries[0].state.amps() == sc.initial.amps());
  CHECK(t.emissions.empty());
}

TEST_CASE("lambda scenario follows its patterns and emits along k_perp") {
  const auto sc = lambda_scenario();
  const Trace t = run(sc.initial, sc.steps);
  CHECK(t.entries.size() == sc.steps.size() + 1);
  CHECK(check_templates(t, sc.templates).empty());
  REQUIRE(t.emissions.size() == 1);
  const auto& rec = t.emissions[0];
  CHECK(rec.mode.id == "w12");
  CHECK(dist(rec.direction, {0, 1, 0}) < 1e-12);
  CHECK(std::abs(rec.gap - rec.mode.omega) < 1e-9);
  for (const auto& e : t.entries) CHECK(std::abs(e.state.norm() - 1.0) < 1e-12);
  const auto& b = *sc.basis;
  CHECK(t.entries[2].state.amp(b.index_of(b.complete(el("A", {{0, 0}}, {{"w10", 1, Guise::product}})))) ==
        Complex{});
}

TEST_CASE("halted light revives along the forward direction") {
  const auto sc = halted_light_scenario();
  const Trace t = run(sc.initial, sc.steps);
  CHECK(check_templates(t, sc.templates).empty());
  REQUIRE(t.emissions.size() == 1);
  const auto& rec = t.emissions[0];
  CHECK(dist(rec.direction, {1, 0, 0}) < 1e-12);
  CHECK(rec.mode.id == "w20");
  CHECK(std::abs(rec.mode.omega - 0.6) < 1e-12);
  CHECK(t.final().momentum.norm() < 1e-12);
  CHECK(t.final().emission_count == 1);
  // Memory loss after the induced emission: nothing entangled with w20 survives.
  const auto& after = t.entries[8].state;
  for (std::size_t i = 0; i < after.size(); ++i)
    if (entangled_with(*sc.basis, i, "w20")) CHECK(std::abs(after.amp(i)) <= 1e-10);
  bool excess = false, induced = false;
  for (const auto& a : t.annotations) {
    excess = excess || (a.step == 4 && a.text.find("excess") != std::string::npos);
    induced = induced || (a.step == 7 && a.text.find("induced") != std::string::npos);
  }
  CHECK(excess);
  CHECK(induced);
}

TEST_CASE("halted light without revival stays stored") {
  HaltedLightParams p;
  p.revival = false;
  const auto sc = halted_light_scenario(p);
  const Trace t = run(sc.initial, sc.steps);
  CHECK(t.entries.size() == 7);
  CHECK(check_templates(t, sc.templates).empty());
  CHECK(t.emissions.empty());
  CHECK(t.final().finite_lifetime);
}

TEST_CASE("halted light requires its mode directions") {
  HaltedLightParams p;
  p.k_minus.reset();
  CHECK(kind_of([&] { halted_light_scenario(p); }) == ErrorKind::invalid_argument);
  p.revival = false;
  CHECK_NOTHROW(halted_light_scenario(p));
  HaltedLightParams z;
  z.k_plus = Vec3{0, 0, 0};
  CHECK(kind_of([&] { halted_light_scenario(z); }) == ErrorKind::invalid_argument);
}

TEST_CASE("momentum ledger equals absorbed minus emitted at every step") {
  const auto sc = halted_light_scenario();
  const Trace t = run(sc.initial, sc.steps);
  Vec3 absorbed, emitted;
  for (std::size_t i = 1; i < t.entries.size(); ++i) {
    if (const auto* l = std::get_if<LaserOn>(&sc.steps[i - 1].action)) {
      const Vec3 d = *l->direction;
      absorbed += (sc.basis->registry().mode(l->mode).omega / d.norm()) * d;
    }
    for (const auto& e : t.entries[i].emissions) emitted += e.k;
    CHECK(dist(t.entries[i].momentum, absorbed - emitted) < 1e-12);
  }
}

TEST_CASE("dissociation outcomes") {
  for (int outcome = 1; outcome <= 4; ++outcome) {
    CAPTURE(outcome);
    const auto sc = one_photon_dissociation_scenario({.outcome = outcome});
    const Trace t = run(sc.initial, sc.steps);
    CHECK(check_templates(t, sc.templates).empty());
    if (outcome == 4) {
      CHECK(t.emissions.empty());
      bool b1 = false;
      for (std::size_t i : support(t.final().state)) b1 = b1 || sc.basis->element(i).partition == "B1";
      CHECK(b1);
    } else {
      REQUIRE(t.emissions.size() == 1);
      CHECK(std::abs(t.emissions[0].gap - t.emissions[0].mode.omega) < 1e-9);
      CHECK(support(t.final().state).size() == 1);
    }
  }
  // Re-emission ends on the bare ground root.
  const auto sc = one_photon_dissociation_scenario({.outcome = 1});
  const Trace t = run(sc.initial, sc.steps);
  const auto& b = *sc.basis;
  CHECK(support(t.final().state) ==
        std::vector<std::size_t>{b.index_of(b.complete(el("A0", {{0, 0}}, {})))});
  CHECK(t.emissions[0].mode.id == "w");
  CHECK(kind_of([] { one_photon_dissociation_scenario({.outcome = 5}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("without a drive the window state does not change") {
  const auto sc = one_photon_dissociation_scenario({.drive = false});
  const Trace t = run(sc.initial, sc.steps);
  CHECK(check_templates(t, sc.templates).empty());
  for (const auto& e : t.entries) CHECK(e.state.amps() == sc.initial.amps());
  CHECK(t.final().state.time_tag() > 0.0);
}

TEST_CASE("dissociation needs the channel partitions") {
  CHECK(kind_of([] { one_photon_dissociation_scenario({}, lambda_scenario().basis); }) == ErrorKind::precondition);
}

TEST_CASE("coherent states are static under waits") {
  for (const auto& sc : {lambda_scenario(), halted_light_scenario()}) {
    const Trace mid = run(sc.initial, std::vector<ProtocolStep>(sc.steps.begin(), sc.steps.begin() + 2));
    const QState s = mid.final().state;
    const Trace t = run(s, {wait_step(3.0, std::nullopt), wait_step(std::nullopt, 0.5), wait_step(100.0, 2.0)});
    for (const auto& e : t.entries) CHECK(e.state.amps() == s.amps());
    CHECK(t.final().state.time_tag() == doctest::Approx(s.time_tag() + 3.0 + 2.0 + 100.0));
  }
}

TEST_CASE("stochastic waits need a seed and are reproducible") {
  const auto sc = lambda_scenario();
  const Trace before = run(sc.initial, std::vector<ProtocolStep>(sc.steps.begin(), sc.steps.end() - 1));
  const QState s = before.final().state;
  const auto& last = std::get<Decohere>(sc.steps.back().action);
  DecayChannel ch{last.emit, last.target, std::nullopt, Vec3{0, 1, 0}, {}};
  const std::vector<ProtocolStep> steps{wait_step(1.0, 0.7, ch)};
  CHECK(kind_of([&] { run(s, steps, {RunMode::stochastic, std::nullopt}); }) == ErrorKind::invalid_argument);

  int fired = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Trace a = run(s, steps, {RunMode::stochastic, seed});
    const Trace b = run(s, steps, {RunMode::stochastic, seed});
    CHECK(a.final().state.amps() == b.final().state.amps());
    CHECK(a.emissions.size() == b.emissions.size());
    fired += static_cast<int>(a.emissions.size());
  }
  // P(tau <= 1) = 1 - exp(-0.7), about 0.5: both outcomes must show up.
  CHECK(fired > 5);
  CHECK(fired < 35);
  // Deterministic runs never fire.
  CHECK(run(s, steps).emissions.empty());
}

TEST_CASE("step failures carry the step index") {
  const auto sc = lambda_scenario();
  std::vector<ProtocolStep> steps{{"noop", Wait{1.0, std::nullopt, std::nullopt}, {}}, sc.steps.back()};
  try {
    run(sc.initial, steps);
    FAIL("expected a step error");
  } catch (const StepError& e) {
    CHECK(e.step() == 1);
    CHECK(e.kind() == ErrorKind::step_failed);
  }
  std::vector<ProtocolStep> bad{{"bad wait", Wait{-1.0, std::nullopt, std::nullopt}, {}}};
  CHECK(kind_of([&] { run(sc.initial, bad); }) == ErrorKind::step_failed);
  std::vector<ProtocolStep> dark{{"dark", LaserOn{"w20", std::nullopt, {{std::size_t{0}, std::size_t{1}, std::nullopt}}, 1.0}, {}}};
  CHECK(kind_of([&] { run(sc.initial, dark); }) == ErrorKind::step_failed);
}

TEST_CASE("template checker reports mismatches") {
  const auto sc = lambda_scenario();
  const Trace t = run(sc.initial, sc.steps);
  auto wrong = sc.templates;
  wrong[0].entries[0].expect = '0';
  const auto m = check_templates(t, wrong);
  REQUIRE(m.size() == 1);
  CHECK(m[0].label == "4a");
  CHECK(m[0].entry == 0);
  // A strict template flags support outside its list.
  SupportTemplate lonely{"lonely", 3, true, {}};
  CHECK_FALSE(check_templates(t, {lonely}).empty());
  lonely.strict = false;
  CHECK(check_templates(t, {lonely}).empty());
  SupportTemplate far{"far", 99, true, {}};
  CHECK_FALSE(check_templates(t, {far}).empty());
}

TEST_CASE("attosecond comb amplitudes") {
  const auto a = attosecond_init({.omega0 = 10.0, .width = 0.5, .spacing = 0.5, .harmonics = 5});
  CHECK(a.warnings.empty());
  CHECK(std::abs(a.state.norm() - 1.0) < 1e-12);
  REQUIRE(a.root_indices.size() == 5);
  const Complex centre = a.state.amp(a.root_indices[2]);
  const double ratios[] = {std::exp(-2.0), std::exp(-0.5), 1.0, std::exp(-0.5), std::exp(-2.0)};
  for (int s = 0; s < 5; ++s) {
    CHECK(std::abs(a.state.amp(a.root_indices[s]) / centre - ratios[s]) < 1e-12);
    CHECK(a.state.amp(a.excited_indices[s]) == Complex{});
    CHECK(a.omegas[s] == doctest::Approx(9.0 + 0.5 * s));
    CHECK(entangled_with(a.state.basis(), a.root_indices[s], "h" + std::to_string(s)));
  }
  // Every excited channel is degenerate with its comb member.
  for (int s = 0; s < 5; ++s)
    CHECK(a.state.basis().level(a.excited_indices[s]) == doctest::Approx(a.state.basis().level(a.root_indices[s])));

  const auto one = attosecond_init({.harmonics = 1});
  CHECK(support(one.state) == std::vector<std::size_t>{one.root_indices[0]});
  CHECK(std::abs(one.state.amp(one.root_indices[0]) - 1.0) < 1e-15);

  const auto even = attosecond_init({.harmonics = 4});
  CHECK(std::abs(even.state.amp(even.root_indices[0]) - even.state.amp(even.root_indices[3])) < 1e-15);
  CHECK(std::abs(even.state.amp(even.root_indices[1]) - even.state.amp(even.root_indices[2])) < 1e-15);

  CHECK_FALSE(attosecond_init({.omega0 = 4.0, .width = 0.5}).warnings.empty());
  CHECK(kind_of([] { attosecond_init({.width = 0.0}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { attosecond_init({.harmonics = 0}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { attosecond_init({.omega0 = 1.0, .spacing = 1.0}); }) == ErrorKind::invalid_argument);
}
