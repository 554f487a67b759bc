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

#include "photonic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "photonic/error.hpp"

namespace photonic {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double CMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::off_diagonal_frobenius() const {
  double s = 0.0;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if (r != c) s += std::norm((*this)(r, c));
  return std::sqrt(s);
}

bool CMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r; c < n_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

std::vector<Complex> CMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != n_) throw Error(ErrorKind::invalid_argument, "dimension mismatch in matrix-vector product");
  std::vector<Complex> out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::invalid_argument, "dimension mismatch in matrix product");
  CMatrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < a.n_; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix out = a;
  for (auto& z : out.data_) z *= s;
  return out;
}

HermitianEigen eigh(const CMatrix& h, double rel_tol, int max_sweeps) {
  const std::size_t n = h.dim();
  if (!h.is_hermitian(1e-12 * std::max(1.0, h.frobenius())))
    throw Error(ErrorKind::invalid_argument, "eigh: matrix is not Hermitian");

  CMatrix a = h;
  CMatrix v = CMatrix::identity(n);
  const double scale = h.frobenius();
  const double target = rel_tol * scale;

  int sweep = 0;
  while (a.off_diagonal_frobenius() > target) {
    if (sweep == max_sweeps)
      throw Error(ErrorKind::numerical, "eigh: Jacobi sweeps did not converge");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase e^{-i phi} on column q makes the pivot real, then a real
        // rotation with cot(2 theta) = (aqq - app) / (2b) annihilates it.
        const Complex phase = apq / b;
        const double zeta = (aqq - app) / (2.0 * b);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const Complex g00 = c, g01 = s;
        const Complex g10 = -s * std::conj(phase), g11 = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A G
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g00 + akq * g10;
          a(k, q) = akp * g01 + akq * g11;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- G^H A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
          a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // V <- V G
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g00 + vkq * g10;
          v(k, q) = vkp * g01 + vkq * g11;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  // Columns are re-orthonormalized in extended precision (two Gram-Schmidt
  // passes) and phase-fixed before the single rounding back to double.
  using LC = std::complex<long double>;
  std::vector<std::vector<LC>> cols(n, std::vector<LC>(n));
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t r = 0; r < n; ++r) cols[col][r] = LC(v(r, order[col]).real(), v(r, order[col]).imag());
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t prev = 0; prev < col; ++prev) {
        LC dot = 0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(cols[prev][r]) * cols[col][r];
        for (std::size_t r = 0; r < n; ++r) cols[col][r] -= dot * cols[prev][r];
      }
      long double nn = 0;
      for (const LC& z : cols[col]) nn += std::norm(z);
      const long double len = std::sqrt(nn);
      for (LC& z : cols[col]) z /= len;
    }

  HermitianEigen out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = CMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]).real();
    const auto& c = cols[col];
    std::size_t big = 0;
    for (std::size_t r = 1; r < n; ++r)
      if (std::abs(c[r]) > std::abs(c[big])) big = r;
    const long double mag = std::abs(c[big]);
    const LC fix = mag > 0 ? std::conj(c[big]) / mag : LC(1);
    for (std::size_t r = 0; r < n; ++r) {
      const LC z = c[r] * fix;
      out.vectors(r, col) = Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    out.vectors(big, col) = static_cast<double>(mag);
  }
  return out;
}

}  // namespace photonic
