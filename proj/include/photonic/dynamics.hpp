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

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "photonic/basis.hpp"
#include "photonic/linalg.hpp"
#include "photonic/qstate.hpp"

namespace photonic {

/// EN transition integrals plus externally driven couplings between basis
/// elements. Only the element couplings enter a Hamiltonian; the integrals
/// are consulted when a drive names a pair without an explicit strength.
class CouplingModel {
 public:
  TransitionIntegrals transitions;

  /// Stores V(a, b); V(b, a) is taken as conj(V(a, b)) unless also given.
  void couple(const BasisElement& a, const BasisElement& b, Complex v);
  const std::map<std::pair<BasisElement, BasisElement>, Complex>& couplings() const { return couplings_; }
  bool is_hermitian(double tol = 1e-12) const;

 private:
  std::map<std::pair<BasisElement, BasisElement>, Complex> couplings_;
};

struct Hamiltonian {
  std::shared_ptr<const Basis> basis;
  CMatrix matrix;
};

/// Diagonal = element levels, off-diagonal = element couplings. Throws on a
/// non-Hermitian model, self-couplings, or elements missing from the basis.
Hamiltonian build_hamiltonian(std::shared_ptr<const Basis> basis, const CouplingModel& cm);

/// exp(-i H dt) applied through the eigendecomposition of each connected
/// block of H; uncoupled elements just pick up their phase.
QState propagate(const QState& s, const Hamiltonian& h, double dt);

/// Dense exp(-i H dt) for a Hermitian matrix.
CMatrix unitary(const CMatrix& h, double dt);

struct SecularSolution {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // orthonormal columns
  std::size_t root_index = 0;

  std::vector<Complex> root_vector() const;
};

SecularSolution solve_secular(const CMatrix& h, double anchor);
inline SecularSolution solve_secular(const Hamiltonian& h, double anchor) {
  return solve_secular(h.matrix, anchor);
}

/// First-order amplitudes around diagonal element `root`, unnormalized.
std::vector<Complex> perturbative_amplitudes(const CMatrix& h, std::size_t root, double guard = 1e-9);

/// Ground + excited + two channel states coupled through the excited state.
struct FourStateParams {
  double e0 = 0.0, e1 = 10.0, e2 = 9.5, e3 = 7.0;
  Complex v01 = 0.2, v12 = 0.2, v13 = 0.2;
};

struct FourStateModel {
  std::shared_ptr<const Basis> basis;
  CouplingModel couplings;
  Hamiltonian hamiltonian;
  std::array<std::size_t, 4> index{};  // basis index of channel 0..3
};

FourStateModel four_state_model(const FourStateParams& p);

/// The 4x4 matrix in channel order 0..3.
CMatrix four_state_matrix(const FourStateParams& p);

struct SlitGeometry {
  double d = 1.0;       // slit separation
  double L = 100.0;     // screen distance
  double kappa = 20.0;  // wavenumber
  int samples = 201;    // odd, so the zero-phase point is sampled
  int fringes = 1;      // phase span is [-fringes*pi, fringes*pi]
};

struct SlitSample {
  double x = 0.0;
  double intensity = 0.0;
};

/// |C1 e^{i kappa r1} + C2 e^{i kappa r2}|^2 at screen points chosen so the
/// interference phase runs uniformly over the requested span.
std::vector<SlitSample> double_slit_pattern(Complex c1, Complex c2, const SlitGeometry& g);

/// (max - min) / (max + min) over the sampled intensities.
double visibility(const std::vector<SlitSample>& pattern);

}  // namespace photonic
