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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "photonic/dynamics.hpp"
#include "photonic/error.hpp"

using namespace photonic;

namespace {

oracle::Mat to_oracle(const CMatrix& m) {
  oracle::Mat out = oracle::zeros(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r][c] = m(r, c);
  return out;
}

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix h(n);
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = g(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      h(r, c) = Complex(g(rng), g(rng));
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

// Two resonant elements: root (x) 1_w and |excited; 0_w>, both at level 1.
struct Pair {
  std::shared_ptr<const Basis> basis;
  BasisElement lower, upper;
};

Pair resonant_pair() {
  auto reg = std::make_shared<const Registry>(
      std::vector<ENLabel>{ENLabel::make(0, 0, 0.0), ENLabel::make(1, 0, 1.0)},
      std::vector<ModeLabel>{ModeLabel::make("w", 1.0, {0, 0, 1})});
  Pair p;
  p.lower = {"A", {{0, 0}}, {{"w", 1, Guise::product}}, PhaseTag::none};
  p.upper = {"A", {{1, 0}}, {{"w", 0, Guise::entangled}}, PhaseTag::none};
  p.basis = std::make_shared<const Basis>(reg, std::vector<PartitionScheme>{PartitionScheme::make("A", {{1}}, {{{0, 0}, {1, 0}}})},
                                          std::vector<BasisElement>{p.lower, p.upper});
  return p;
}

}  // namespace

TEST_CASE("hamiltonian diagonal holds element levels") {
  auto m = four_state_model({});
  const auto& h = m.hamiltonian.matrix;
  CHECK(h.is_hermitian(1e-12));
  CHECK(h.dim() == m.basis->size());
  for (std::size_t i = 0; i < h.dim(); ++i) CHECK(h(i, i).real() == doctest::Approx(m.basis->level(i)));
  const CMatrix four = four_state_matrix({});
  const double e[] = {0.0, 10.0, 9.5, 7.0};
  for (int i = 0; i < 4; ++i) CHECK(four(i, i).real() == doctest::Approx(e[i]));
  CHECK(four(0, 1) == Complex(0.2));
  CHECK(four(1, 2) == Complex(0.2));
  CHECK(four(1, 3) == Complex(0.2));
  // No coupling between ground and the far channels.
  CHECK(four(0, 2) == Complex{});
  CHECK(four(0, 3) == Complex{});
  CHECK(four(2, 3) == Complex{});
}

TEST_CASE("dark transitions stay exactly zero and bad models are rejected") {
  auto p = resonant_pair();
  CouplingModel cm;
  cm.transitions.set({0, 0}, {1, 0}, 0.0);
  const auto h = build_hamiltonian(p.basis, cm);
  CHECK(h.matrix(0, 1) == Complex{});
  CHECK(h.matrix(1, 0) == Complex{});

  CouplingModel bad;
  bad.couple(p.lower, p.upper, {0.1, 0.0});
  bad.couple(p.upper, p.lower, {0.3, 0.0});
  CHECK(kind_of([&] { build_hamiltonian(p.basis, bad); }) == ErrorKind::invalid_argument);
  CouplingModel self;
  CHECK(kind_of([&] { self.couple(p.lower, p.lower, 1.0); }) == ErrorKind::invalid_argument);
  CouplingModel stranger;
  stranger.couple(p.lower, {"A", {{1, 0}}, {{"w", 1, Guise::product}}, PhaseTag::none}, 0.1);
  CHECK(kind_of([&] { build_hamiltonian(p.basis, stranger); }).has_value());
}

TEST_CASE("propagation with dt = 0 is the identity and diagonal phases match closed form") {
  auto m = four_state_model({.v01 = 0.0, .v12 = 0.0, .v13 = 0.0});
  std::vector<Complex> a(m.basis->size());
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (auto& z : a) z = {g(rng), g(rng)};
  const QState s = QState(m.basis, a).normalized();
  const QState same = propagate(s, m.hamiltonian, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(same.amp(i) - s.amp(i)) < 1e-15);

  const double dt = 0.37;
  const QState t = propagate(s, m.hamiltonian, dt);
  CHECK(t.time_tag() == doctest::Approx(dt));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Complex want = s.amp(i) * std::polar(1.0, -m.basis->level(i) * dt);
    CHECK(std::abs(t.amp(i) - want) < 1e-13);
  }
}

TEST_CASE("resonant pair completes a Rabi half cycle at pi/(2V)") {
  auto p = resonant_pair();
  for (double v : {0.05, 0.3, 1.7}) {
    CouplingModel cm;
    cm.couple(p.lower, p.upper, v);
    const auto h = build_hamiltonian(p.basis, cm);
    const QState s = window_state(p.basis, p.lower);
    const QState t = propagate(s, h, std::numbers::pi / (2.0 * v));
    CHECK(std::norm(t.amp(p.basis->index_of(p.upper))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(t.amp(p.basis->index_of(p.lower))) < 1e-10);
    // Quarter way: populations follow cos^2 / sin^2 of V t.
    const double tq = std::numbers::pi / (8.0 * v);
    const QState q = propagate(s, h, tq);
    CHECK(std::norm(q.amp(0)) == doctest::Approx(std::pow(std::cos(v * tq), 2)).epsilon(1e-12));
  }
}

TEST_CASE("propagation composes, preserves norm and matches the Taylor oracle") {
  std::mt19937_64 rng(17);
  auto m = four_state_model({.v01 = 0.4, .v12 = Complex(0.1, 0.3), .v13 = 0.25});
  std::vector<Complex> a(m.basis->size());
  std::normal_distribution<double> g;
  for (auto& z : a) z = {g(rng), g(rng)};
  const QState s = QState(m.basis, a).normalized();
  const QState ab = propagate(s, m.hamiltonian, 0.7 + 1.9);
  const QState a_then_b = propagate(propagate(s, m.hamiltonian, 0.7), m.hamiltonian, 1.9);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(ab.amp(i) - a_then_b.amp(i)) < 1e-10);
  CHECK(std::abs(ab.norm() - 1.0) < 1e-12);

  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    const CMatrix h = random_hermitian(n, rng);
    const double dt = 0.83;
    const auto want = oracle::expm_taylor(to_oracle(h), dt);
    CHECK(oracle::max_abs_diff(to_oracle(unitary(h, dt)), want) < 1e-9);
  }
  CHECK(kind_of([&] { propagate(s, m.hamiltonian, std::nan("")); }) == ErrorKind::invalid_argument);
  auto other = resonant_pair();
  CHECK(kind_of([&] { propagate(window_state(other.basis, std::size_t{0}), m.hamiltonian, 1.0); }) ==
        ErrorKind::invalid_argument);
}

TEST_CASE("eigensolver meets residual, orthonormality and phase conventions") {
  std::mt19937_64 rng(23);
  for (std::size_t n : {1u, 3u, 8u, 16u}) {
    const CMatrix h = random_hermitian(n, rng);
    const auto e = eigh(h);
    const auto oracle_values = oracle::real_roots(oracle::char_poly(to_oracle(h)));
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(e.values[k] == doctest::Approx(oracle_values[k]).epsilon(1e-9));
      if (k) CHECK(e.values[k - 1] <= e.values[k]);
      std::vector<Complex> v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = e.vectors(r, k);
      const auto hv = h.apply(v);
      double res = 0.0, big = 0.0;
      std::size_t arg = 0;
      for (std::size_t r = 0; r < n; ++r) {
        res = std::max(res, std::abs(hv[r] - e.values[k] * v[r]));
        if (std::abs(v[r]) > big) big = std::abs(v[r]), arg = r;
      }
      CHECK(res <= 1e-9 * h.frobenius());
      CHECK(v[arg].imag() == 0.0);
      CHECK(v[arg].real() > 0.0);
    }
    const CMatrix gram = e.vectors.adjoint() * e.vectors;
    CHECK((gram - CMatrix::identity(n)).frobenius() < 1e-10);
  }
  CMatrix bad(2);
  bad(0, 1) = 1.0;
  CHECK(kind_of([&] { eigh(bad); }) == ErrorKind::invalid_argument);
}

TEST_CASE("diagonal secular problem returns the diagonal and unit vectors") {
  CMatrix h(3);
  h(0, 0) = 2.0;
  h(1, 1) = -1.0;
  h(2, 2) = 0.5;
  const auto s = solve_secular(h, 0.4);
  CHECK(s.eigenvalues == std::vector<double>{-1.0, 0.5, 2.0});
  CHECK(s.root_index == 1);
  CHECK(s.eigenvectors(2, 1) == Complex(1.0));
  // Tie: anchor halfway between -1 and 0.5 picks the lower index.
  CHECK(solve_secular(h, -0.25).root_index == 0);
}

TEST_CASE("four-state root ordering follows the eigensolve oracle") {
  const CMatrix h = four_state_matrix({});
  const auto ho = to_oracle(h);
  const auto lambdas = oracle::real_roots(oracle::char_poly(ho));
  auto nearest = [&](double anchor) {
    double best = lambdas[0];
    for (double l : lambdas)
      if (std::abs(l - anchor) < std::abs(best - anchor)) best = l;
    return best;
  };
  for (double anchor : {10.0, 0.0}) {
    const auto sol = solve_secular(h, anchor);
    const double lam = nearest(anchor);
    CHECK(sol.eigenvalues[sol.root_index] == doctest::Approx(lam).epsilon(1e-9));
    const auto want = oracle::cofactor_vector(ho, lam);
    const auto got = sol.root_vector();
    for (int i = 0; i < 4; ++i) CHECK(std::abs(got[i]) == doctest::Approx(std::abs(want[i])).epsilon(1e-9));
    if (anchor == 10.0) {
      CHECK(std::abs(got[1]) > std::abs(got[2]));
      CHECK(std::abs(got[2]) > std::abs(got[3]));
    } else {
      CHECK(std::abs(got[3]) > std::abs(got[2]));
    }
  }
}

TEST_CASE("first-order amplitudes") {
  CMatrix diag(3);
  diag(0, 0) = 1.0;
  diag(1, 1) = 2.0;
  diag(2, 2) = 2.0;
  // Degenerate but uncoupled levels are fine.
  CHECK(perturbative_amplitudes(diag, 1) == std::vector<Complex>{0.0, 1.0, 0.0});
  diag(1, 2) = 0.1;
  diag(2, 1) = 0.1;
  CHECK(kind_of([&] { perturbative_amplitudes(diag, 1); }) == ErrorKind::precondition);
  CHECK(kind_of([&] { perturbative_amplitudes(diag, 3); }) == ErrorKind::invalid_argument);

  const CMatrix h = four_state_matrix({});
  const auto c = perturbative_amplitudes(h, 1);
  CHECK(c[1] == Complex(1.0));
  CHECK(c[0] == Complex(0.2 / 10.0));
  CHECK(c[2] == Complex(0.2 / 0.5));
  CHECK(c[3] == Complex(0.2 / 3.0));
}

TEST_CASE("first-order error falls about fourfold per halving") {
  auto error_at = [](double v) {
    const CMatrix h = four_state_matrix({.v01 = v, .v12 = v, .v13 = v});
    const auto exact = solve_secular(h, 10.0).root_vector();
    const auto pert = perturbative_amplitudes(h, 1);
    // Unit eigenvector against the unnormalized first-order vector; the
    // root component carries the O(V^2) normalization deficit.
    double e = 0.0;
    for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(std::abs(exact[i]) - std::abs(pert[i])));
    return e;
  };
  double prev = error_at(0.2);
  for (double v : {0.1, 0.05, 0.025}) {
    const double cur = error_at(v);
    CHECK(prev / cur >= 3.0);
    CHECK(prev / cur <= 5.0);
    prev = cur;
  }
}

TEST_CASE("double-slit pattern") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto even = double_slit_pattern(r, r, {});
  CHECK(even.size() == 201);
  CHECK(visibility(even) == doctest::Approx(1.0).epsilon(1e-9));
  const auto& mid = even[100];
  CHECK(std::abs(mid.x) < 1e-12);
  for (const auto& s : even) CHECK(s.intensity <= mid.intensity + 1e-12);
  CHECK(mid.intensity == doctest::Approx(2.0));

  const auto flat = double_slit_pattern(1.0, 0.0, {});
  for (const auto& s : flat) CHECK(s.intensity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(visibility(flat) < 1e-12);

  CHECK(visibility(double_slit_pattern(std::sqrt(0.9), std::sqrt(0.1), {})) == doctest::Approx(0.6).epsilon(1e-9));
  // A relative phase moves the fringes but not the contrast.
  CHECK(visibility(double_slit_pattern(std::sqrt(0.9), std::polar(std::sqrt(0.1), 2.0), {})) ==
        doctest::Approx(0.6).epsilon(1e-9));

  CHECK(kind_of([] { double_slit_pattern(1.0, 1.0, {}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { double_slit_pattern(1.0, 0.0, {.samples = 4}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { double_slit_pattern(1.0, 0.0, {.d = -1.0}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { double_slit_pattern(1.0, 0.0, {.kappa = 1.0}); }) == ErrorKind::precondition);
  CHECK(kind_of([] { visibility({}); }) == ErrorKind::invalid_argument);
}
