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

#include "photonic/spin.hpp"

#include <cmath>
#include <sstream>

#include "photonic/error.hpp"

namespace photonic {

namespace {

using M4 = std::array<std::array<Complex, 4>, 4>;
using M2 = std::array<std::array<Complex, 2>, 2>;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

M4 kron(const M2& a, const M2& b) {
  M4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return out;
}

M4 add(const M4& a, const M4& b) {
  M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[i][j] + b[i][j];
  return out;
}

M4 mul(const M4& a, const M4& b) {
  M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Total spin component: s (x) 1 + 1 (x) s.
M4 total_component(const M2& s) {
  const M2 id{{{1.0, 0.0}, {0.0, 1.0}}};
  return add(kron(s, id), kron(id, s));
}

const M2 kSx{{{0.0, 0.5}, {0.5, 0.0}}};
const M2 kSy{{{0.0, Complex(0.0, -0.5)}, {Complex(0.0, 0.5), 0.0}}};
const M2 kSz{{{0.5, 0.0}, {0.0, -0.5}}};

M4 s2_matrix() {
  const M4 x = total_component(kSx), y = total_component(kSy), z = total_component(kSz);
  return add(add(mul(x, x), mul(y, y)), mul(z, z));
}

std::array<Complex, 4> act(const M4& m, const std::array<Complex, 4>& v) {
  std::array<Complex, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
  return out;
}

Complex dot(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  Complex s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double spin_weight(const SpinSpaceFunction& f) {
  return std::real(dot(f.spin, f.spin));
}

std::string coeff_list(const std::string* names, const Complex* c, int n) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (std::abs(c[i]) < 1e-15) continue;
    const double re = c[i].real();
    os << (first ? (re < 0 ? "-" : "") : (re < 0 ? " - " : " + ")) << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

// Common magnitude of the non-zero coefficients, rendered as 1 or 1/sqrt2.
std::string prefactor(const Complex* c, int n) {
  double mag = 0.0;
  for (int i = 0; i < n; ++i)
    if (std::abs(c[i]) > 1e-15) mag = std::abs(c[i]);
  if (std::abs(mag - kInvSqrt2) < 1e-12) return "(1/sqrt2)";
  if (std::abs(mag - 1.0) < 1e-12) return "";
  std::ostringstream os;
  os.precision(12);
  os << mag;
  return os.str();
}

}  // namespace

std::array<Complex, 8> SpinSpaceFunction::total() const {
  std::array<Complex, 8> out{};
  for (int s = 0; s < 4; ++s)
    for (int p = 0; p < 2; ++p) out[2 * s + p] = spin[s] * space[p];
  return out;
}

double SpinSpaceFunction::norm() const {
  double sum = 0.0;
  for (const auto& z : total()) sum += std::norm(z);
  return std::sqrt(sum);
}

SpinSpaceFunction singlet() {
  return {"singlet S=0", {0.0, kInvSqrt2, -kInvSqrt2, 0.0}, {kInvSqrt2, kInvSqrt2}};
}

SpinSpaceFunction triplet(int ms) {
  const std::array<Complex, 2> space{kInvSqrt2, -kInvSqrt2};
  switch (ms) {
    case 1:
      return {"triplet S=1 ms=+1", {1.0, 0.0, 0.0, 0.0}, space};
    case 0:
      return {"triplet S=1 ms=0", {0.0, kInvSqrt2, kInvSqrt2, 0.0}, space};
    case -1:
      return {"triplet S=1 ms=-1", {0.0, 0.0, 0.0, 1.0}, space};
    default:
      throw Error(ErrorKind::invalid_argument, "ms must be -1, 0 or +1, got " + std::to_string(ms));
  }
}

SpinSpaceFunction permute_labels(const SpinSpaceFunction& f, PermuteWhich which) {
  SpinSpaceFunction out = f;
  if (which != PermuteWhich::space) std::swap(out.spin[1], out.spin[2]);
  if (which != PermuteWhich::spin) std::swap(out.space[0], out.space[1]);
  return out;
}

double s2_expectation(const SpinSpaceFunction& f) {
  return std::real(dot(f.spin, act(s2_matrix(), f.spin))) / spin_weight(f);
}

double s2_variance(const SpinSpaceFunction& f) {
  const M4 s2 = s2_matrix();
  const double mean = s2_expectation(f);
  const auto once = act(s2, f.spin);
  const double second = std::real(dot(once, once)) / spin_weight(f);
  return second - mean * mean;
}

double sz_expectation(const SpinSpaceFunction& f) {
  return std::real(dot(f.spin, act(total_component(kSz), f.spin))) / spin_weight(f);
}

Complex inner(const SpinSpaceFunction& f, const SpinSpaceFunction& g) {
  const auto a = f.total(), b = g.total();
  Complex s = 0.0;
  for (int i = 0; i < 8; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

std::string pretty(const SpinSpaceFunction& f) {
  static const std::string spin_names[4] = {"alpha(m-1)alpha(m)", "alpha(m-1)beta(m)", "beta(m-1)alpha(m)",
                                            "beta(m-1)beta(m)"};
  static const std::string space_names[2] = {"|phi_..m-1>|phi_m>", "|phi_..m>|phi_m-1>"};
  std::ostringstream os;
  os << f.name << ": " << prefactor(f.spin.data(), 4) << "[" << coeff_list(spin_names, f.spin.data(), 4)
     << "] (x) " << prefactor(f.space.data(), 2) << "[" << coeff_list(space_names, f.space.data(), 2) << "]";
  return os.str();
}

}  // namespace photonic
