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
#include <random>

#include "photonic/basis.hpp"
#include "photonic/error.hpp"
#include "photonic/qstate.hpp"

using namespace photonic;

namespace {

std::shared_ptr<const Basis> small_basis(double omega = 1.0) {
  auto reg = std::make_shared<const Registry>(
      std::vector<ENLabel>{ENLabel::make(0, 0, 0.0), ENLabel::make(1, 0, 1.0)},
      std::vector<ModeLabel>{ModeLabel::make("w", omega, {0, 0, 1})});
  return enumerate_basis(reg, {PartitionScheme::make("A", {{1}}, {{{0, 0}, {1, 0}}})}, 1);
}

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

BasisElement el(int j, int n, Guise g) { return {"A", {{j, 0}}, {{"w", n, g}}, PhaseTag::none}; }

}  // namespace

TEST_CASE("window state is a unit vector on one element") {
  auto b = small_basis();
  const auto s = window_state(b, el(1, 0, Guise::entangled));
  CHECK(s.is_normalized());
  const std::size_t idx = b->index_of(el(1, 0, Guise::entangled));
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s.amp(i)) == (i == idx ? 1.0 : 0.0));
  // Missing slots are completed with vacuum.
  BasisElement bare{"A", {{1, 0}}, {}, PhaseTag::none};
  CHECK(support(window_state(b, bare)) == std::vector<std::size_t>{b->index_of(el(1, 0, Guise::product))});
  CHECK(kind_of([&] { window_state(b, std::size_t{99}); }) == ErrorKind::not_found);
}

TEST_CASE("state construction validates input") {
  auto b = small_basis();
  CHECK(kind_of([&] { QState(b, std::vector<Complex>(3)); }) == ErrorKind::invalid_argument);
  std::vector<Complex> bad(b->size());
  bad[0] = {std::nan(""), 0.0};
  CHECK(kind_of([&] { QState(b, bad); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([&] { QState(b, std::vector<Complex>(b->size())).normalized(); }) == ErrorKind::numerical);
}

TEST_CASE("erase zeroes listed amplitudes and is idempotent") {
  auto b = small_basis();
  std::vector<Complex> a(b->size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = Complex(1.0 + i, 0.5 * i);
  const QState s = QState(b, a).normalized();
  const std::vector<std::size_t> idx{1, 4};
  const QState once = erase(s, idx);
  const QState twice = erase(once, idx);
  CHECK(once.amps() == twice.amps());
  CHECK(once.amp(1) == Complex{});
  CHECK(once.amp(4) == Complex{});
  CHECK(once.amp(0) == s.amp(0));
  CHECK(once.norm() <= s.norm());
  const QState renorm = erase(s, idx, true);
  CHECK(renorm.is_normalized());

  std::vector<std::size_t> all(b->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(erase(s, all).norm() == 0.0);
  CHECK(kind_of([&] { erase(s, all, true); }) == ErrorKind::numerical);
  const std::vector<std::size_t> out_of_range{100};
  CHECK(kind_of([&] { erase(s, out_of_range); }) == ErrorKind::invalid_argument);
}

TEST_CASE("support respects tolerance") {
  auto b = small_basis();
  std::vector<Complex> a(b->size());
  a[2] = 1.0;
  a[5] = 1e-12;
  a[6] = 1e-6;
  const QState s(b, a);
  CHECK(support(s) == std::vector<std::size_t>{2, 6});
  CHECK(support(s, 1e-3) == std::vector<std::size_t>{2});
  CHECK(support(s, 0.0) == std::vector<std::size_t>{2, 5, 6});
  CHECK(kind_of([&] { support(s, -1.0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("decohere of a free photon") {
  auto b = small_basis();
  const std::size_t from = b->index_of(el(0, 1, Guise::product));
  const std::size_t to = b->index_of(el(0, 0, Guise::product));
  const auto s = window_state(b, from);
  DecohereOptions o;
  o.R = {0, 0, 5};
  const auto r = decohere(s, from, to, o);
  CHECK(r.record.mode.id == "w");
  CHECK(r.record.gap == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.record.mode.omega == doctest::Approx(r.record.gap).epsilon(1e-12));
  CHECK(r.record.direction == Vec3{0, 0, 1});
  CHECK(r.record.k == Vec3{0, 0, 1});
  CHECK(r.record.R == Vec3{0, 0, 5});
  CHECK(std::abs(r.record.amplitude) == doctest::Approx(1.0));
  // Phase picked up at the detector: exp(i k.R).
  CHECK(std::arg(r.record.amplitude) == doctest::Approx(std::remainder(5.0, 2 * M_PI)));
  CHECK(r.residual.norm() == 0.0);
  CHECK(support(r.emitted_branch) == std::vector<std::size_t>{to});
  CHECK(emitted_mode(b->element(from), b->element(to)) == std::optional<std::string>("w"));
  CHECK_FALSE(emitted_mode(b->element(to), b->element(from)).has_value());
}

TEST_CASE("decohere conserves probability on random superpositions") {
  auto b = small_basis();
  const std::size_t from = b->index_of(el(0, 1, Guise::product));
  const std::size_t to = b->index_of(el(0, 0, Guise::product));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> a(b->size());
    for (auto& z : a) z = {g(rng), g(rng)};
    const QState s = QState(b, a).normalized();
    const auto r = decohere(s, from, to);
    CHECK(std::norm(r.record.amplitude) + r.residual.norm() * r.residual.norm() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.record.amplitude == s.amp(from));
  }
}

TEST_CASE("decohere rejects invalid requests") {
  auto b = small_basis();
  const std::size_t from = b->index_of(el(0, 1, Guise::product));
  const std::size_t to = b->index_of(el(0, 0, Guise::product));
  const auto s = window_state(b, from);
  CHECK(kind_of([&] { decohere(s, from, from); }) == ErrorKind::precondition);
  CHECK(kind_of([&] { decohere(s, from, 999); }) == ErrorKind::invalid_argument);
  // Element not in the support.
  CHECK(kind_of([&] { decohere(window_state(b, to), from, to); }) == ErrorKind::precondition);
  // Different EN labels.
  CHECK(kind_of([&] { decohere(s, from, b->index_of(el(1, 0, Guise::product))); }) == ErrorKind::precondition);
  // An entangled photon is not free to leave.
  const std::size_t bound = b->index_of(el(0, 1, Guise::entangled));
  CHECK(kind_of([&] { decohere(window_state(b, bound), bound, to); }) == ErrorKind::precondition);
  // No photon to give away.
  const std::size_t vac = b->index_of(el(0, 0, Guise::entangled));
  CHECK(kind_of([&] { decohere(window_state(b, vac), vac, to); }) == ErrorKind::precondition);
  DecohereOptions zero_dir;
  zero_dir.direction = Vec3{0, 0, 0};
  CHECK(kind_of([&] { decohere(s, from, to, zero_dir); }) == ErrorKind::invalid_argument);
  DecohereOptions unknown;
  unknown.mode = "nope";
  CHECK(kind_of([&] { decohere(s, from, to, unknown); }) == ErrorKind::not_found);
}

TEST_CASE("time tag advances without touching amplitudes") {
  auto b = small_basis();
  const auto s = window_state(b, std::size_t{3});
  const auto t = s.advanced(2.5);
  CHECK(t.time_tag() == 2.5);
  CHECK(t.amps() == s.amps());
}
