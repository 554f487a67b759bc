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

#include "photonic/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "photonic/error.hpp"

namespace photonic {

void CouplingModel::couple(const BasisElement& a, const BasisElement& b, Complex v) {
  if (a == b) throw Error(ErrorKind::invalid_argument, "an element cannot couple to itself");
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(ErrorKind::invalid_argument, "coupling must be finite");
  couplings_[{a, b}] = v;
}

bool CouplingModel::is_hermitian(double tol) const {
  if (!transitions.is_hermitian(tol)) return false;
  for (const auto& [key, v] : couplings_) {
    auto it = couplings_.find({key.second, key.first});
    if (it != couplings_.end() && std::abs(it->second - std::conj(v)) > tol) return false;
  }
  return true;
}

Hamiltonian build_hamiltonian(std::shared_ptr<const Basis> basis, const CouplingModel& cm) {
  if (!basis) throw Error(ErrorKind::invalid_argument, "hamiltonian needs a basis");
  if (!cm.is_hermitian()) throw Error(ErrorKind::invalid_argument, "coupling model is not Hermitian");
  const std::size_t n = basis->size();
  CMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = basis->level(i);
  for (const auto& [key, v] : cm.couplings()) {
    const std::size_t a = basis->index_of(basis->complete(key.first));
    const std::size_t b = basis->index_of(basis->complete(key.second));
    if (a == b) throw Error(ErrorKind::invalid_argument, "an element cannot couple to itself");
    h(a, b) = v;
    if (!cm.couplings().contains({key.second, key.first})) h(b, a) = std::conj(v);
  }
  return {std::move(basis), std::move(h)};
}

CMatrix unitary(const CMatrix& h, double dt) {
  const std::size_t n = h.dim();
  if (!std::isfinite(dt)) throw Error(ErrorKind::invalid_argument, "time step must be finite");
  const HermitianEigen eig = eigh(h);
  // Accumulate V diag(e^{-i E dt}) V^H in extended precision; rounding each
  // entry once keeps U unitary to about one ulp.
  using LC = std::complex<long double>;
  std::vector<LC> acc(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double arg = -static_cast<long double>(eig.values[k]) * dt;
    const LC ph(std::cos(arg), std::sin(arg));
    for (std::size_t r = 0; r < n; ++r) {
      const LC vr = LC(eig.vectors(r, k).real(), eig.vectors(r, k).imag()) * ph;
      for (std::size_t c = 0; c < n; ++c)
        acc[r * n + c] += vr * std::conj(LC(eig.vectors(c, k).real(), eig.vectors(c, k).imag()));
    }
  }
  CMatrix u(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      u(r, c) = Complex(static_cast<double>(acc[r * n + c].real()), static_cast<double>(acc[r * n + c].imag()));
  return u;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

QState propagate(const QState& s, const Hamiltonian& h, double dt) {
  if (!h.basis || !(s.basis_ptr() == h.basis || s.basis().same_as(*h.basis)))
    throw Error(ErrorKind::invalid_argument, "state and hamiltonian live on different bases");
  if (!std::isfinite(dt)) throw Error(ErrorKind::invalid_argument, "time step must be finite");
  const std::size_t n = h.matrix.dim();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (h.matrix(r, c) != Complex{} || h.matrix(c, r) != Complex{})
        parent[find_root(parent, r)] = find_root(parent, c);

  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[find_root(parent, i)].push_back(i);

  std::vector<Complex> out(n);
  for (const auto& [root, idx] : blocks) {
    if (idx.size() == 1) {
      const std::size_t i = idx.front();
      out[i] = std::polar(1.0, -h.matrix(i, i).real() * dt) * s.amp(i);
      continue;
    }
    CMatrix sub(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = h.matrix(idx[r], idx[c]);
    const CMatrix u = unitary(sub, dt);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < idx.size(); ++c) acc += u(r, c) * s.amp(idx[c]);
      out[idx[r]] = acc;
    }
  }
  return QState(s.basis_ptr(), std::move(out), s.time_tag() + dt);
}

std::vector<Complex> SecularSolution::root_vector() const {
  std::vector<Complex> v(eigenvectors.dim());
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = eigenvectors(r, root_index);
  return v;
}

SecularSolution solve_secular(const CMatrix& h, double anchor) {
  if (h.dim() == 0) throw Error(ErrorKind::invalid_argument, "empty hamiltonian");
  if (!std::isfinite(anchor)) throw Error(ErrorKind::invalid_argument, "anchor must be finite");
  HermitianEigen eig = eigh(h);
  SecularSolution out;
  out.eigenvalues = std::move(eig.values);
  out.eigenvectors = std::move(eig.vectors);
  for (std::size_t k = 1; k < out.eigenvalues.size(); ++k)
    if (std::abs(out.eigenvalues[k] - anchor) < std::abs(out.eigenvalues[out.root_index] - anchor))
      out.root_index = k;
  return out;
}

std::vector<Complex> perturbative_amplitudes(const CMatrix& h, std::size_t root, double guard) {
  const std::size_t n = h.dim();
  if (root >= n) throw Error(ErrorKind::invalid_argument, "root index out of range");
  std::vector<Complex> c(n);
  const double er = h(root, root).real();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == root) {
      c[i] = 1.0;
      continue;
    }
    const Complex v = h(i, root);
    if (v == Complex{}) continue;
    const double gap = er - h(i, i).real();
    if (std::abs(gap) <= guard)
      throw Error(ErrorKind::precondition, "levels " + std::to_string(root) + " and " + std::to_string(i) +
                                               " are degenerate; first-order amplitudes undefined");
    c[i] = v / gap;
  }
  return c;
}

FourStateModel four_state_model(const FourStateParams& p) {
  for (double e : {p.e0, p.e1, p.e2, p.e3})
    if (!std::isfinite(e)) throw Error(ErrorKind::invalid_argument, "four-state levels must be finite");
  // (9,0) is the fragment left behind by either dissociative channel; it sits at zero.
  const ENKey g{0, 0}, x{1, 0}, c2{2, 0}, c3{3, 0}, rest{9, 0};
  auto reg = std::make_shared<const Registry>(
      std::vector<ENLabel>{ENLabel::make(0, 0, p.e0), ENLabel::make(1, 0, p.e1), ENLabel::make(2, 0, p.e2),
                           ENLabel::make(3, 0, p.e3), ENLabel::make(9, 0, 0.0)},
      std::vector<ModeLabel>{});
  std::vector<PartitionScheme> parts{
      PartitionScheme::make("A0", {{1, 2, 3}}, {{g, x}}),
      PartitionScheme::make("B1", {{1, 2}, {3}}, {{c2}, {rest}}),
      PartitionScheme::make("B2", {{1}, {2, 3}}, {{rest}, {c3}}),
  };
  const std::array<BasisElement, 4> el{
      BasisElement{"A0", {g}, {}, PhaseTag::none},
      BasisElement{"A0", {x}, {}, PhaseTag::none},
      BasisElement{"B1", {c2, rest}, {}, PhaseTag::none},
      BasisElement{"B2", {rest, c3}, {}, PhaseTag::none},
  };
  FourStateModel m;
  m.basis = std::make_shared<const Basis>(reg, parts, std::vector<BasisElement>(el.begin(), el.end()));
  m.couplings.couple(el[0], el[1], p.v01);
  m.couplings.couple(el[1], el[2], p.v12);
  m.couplings.couple(el[1], el[3], p.v13);
  m.hamiltonian = build_hamiltonian(m.basis, m.couplings);
  for (std::size_t i = 0; i < 4; ++i) m.index[i] = m.basis->index_of(el[i]);
  return m;
}

CMatrix four_state_matrix(const FourStateParams& p) {
  const FourStateModel m = four_state_model(p);
  CMatrix out(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out(r, c) = m.hamiltonian.matrix(m.index[r], m.index[c]);
  return out;
}

std::vector<SlitSample> double_slit_pattern(Complex c1, Complex c2, const SlitGeometry& g) {
  const double weight = std::norm(c1) + std::norm(c2);
  if (std::abs(weight - 1.0) > 1e-9)
    throw Error(ErrorKind::invalid_argument, "slit amplitudes must satisfy |C1|^2 + |C2|^2 = 1");
  if (!(g.d > 0.0) || !(g.L > 0.0) || !(g.kappa > 0.0) || !std::isfinite(g.d) || !std::isfinite(g.L) ||
      !std::isfinite(g.kappa))
    throw Error(ErrorKind::invalid_argument, "slit geometry needs d, L, kappa > 0");
  if (g.samples < 3 || g.samples % 2 == 0)
    throw Error(ErrorKind::invalid_argument, "samples must be odd and >= 3");
  if (g.fringes < 1) throw Error(ErrorKind::invalid_argument, "fringes must be >= 1");
  const double pi = std::numbers::pi;
  if (g.kappa * g.d <= (g.fringes + 1) * pi)
    throw Error(ErrorKind::precondition, "kappa * d too small to span the requested fringes on the screen");

  const double alpha = std::arg(c2) - std::arg(c1);
  const double alpha_wrapped = std::remainder(alpha, 2.0 * pi);
  const double h = g.d / 2.0;
  std::vector<SlitSample> out;
  out.reserve(static_cast<std::size_t>(g.samples));
  for (int s = 0; s < g.samples; ++s) {
    const double psi = g.fringes * pi * (2.0 * s / (g.samples - 1) - 1.0);
    // Path difference r2 - r1 that puts the interference phase at psi; the
    // screen point follows from the hyperbola with foci at the slits.
    const double delta = (psi - alpha_wrapped) / g.kappa;
    const double a = std::abs(delta) / 2.0;
    const double b2 = h * h - a * a;
    double x = a * std::sqrt(1.0 + g.L * g.L / b2);
    if (delta < 0.0) x = -x;
    const double r1 = std::hypot(g.L, x - h);
    const double r2 = std::hypot(g.L, x + h);
    const Complex amp = c1 * std::polar(1.0, g.kappa * r1) + c2 * std::polar(1.0, g.kappa * r2);
    out.push_back({x, std::norm(amp)});
  }
  return out;
}

double visibility(const std::vector<SlitSample>& pattern) {
  if (pattern.empty()) throw Error(ErrorKind::invalid_argument, "empty pattern");
  auto [lo, hi] = std::minmax_element(pattern.begin(), pattern.end(),
                                      [](const SlitSample& a, const SlitSample& b) { return a.intensity < b.intensity; });
  const double sum = hi->intensity + lo->intensity;
  if (sum == 0.0) throw Error(ErrorKind::numerical, "pattern is identically zero");
  return (hi->intensity - lo->intensity) / sum;
}

}  // namespace photonic
