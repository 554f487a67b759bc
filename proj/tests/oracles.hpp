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

// Reference computations used only by the tests. None of this goes through
// the library's eigensolver or propagator.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n)); }

inline Mat identity(std::size_t n) {
  Mat m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

// Coefficients c[0..n] of det(lambda I - A) = sum c[k] lambda^k, Faddeev-LeVerrier.
inline std::vector<C> char_poly(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<C> c(n + 1);
  c[n] = 1.0;
  Mat m = zeros(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat am = mul(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    Mat amk = mul(a, m);
    C tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += amk[i][i];
    c[n - k] = -tr / static_cast<double>(k);
  }
  return c;
}

inline C horner(const std::vector<C>& c, C x) {
  C v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

// All roots of a monic polynomial: Durand-Kerner, then Newton polishing.
inline std::vector<double> real_roots(const std::vector<C>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<C> z(n);
  double bound = 0.0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k]));
  const C seed(0.4, 0.9);
  for (std::size_t k = 0; k < n; ++k) z[k] = (1.0 + bound) * std::pow(seed, static_cast<double>(k));
  for (int it = 0; it < 2000; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      C den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const C step = horner(c, z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  std::vector<C> dc(n);
  for (std::size_t k = 1; k <= n; ++k) dc[k - 1] = c[k] * static_cast<double>(k);
  std::vector<double> out;
  for (C r : z) {
    double x = r.real();
    for (int it = 0; it < 50; ++it) {
      const C d = horner(dc, x);
      if (std::abs(d) == 0.0) break;
      const double step = (horner(c, x) / d).real();
      x -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline C det(Mat a) {
  const std::size_t n = a.size();
  C d = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const C f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

// Eigenvector for a simple eigenvalue: the largest column of adj(A - lambda I).
inline std::vector<C> cofactor_vector(const Mat& a, double lambda) {
  const std::size_t n = a.size();
  Mat m = a;
  for (std::size_t i = 0; i < n; ++i) m[i][i] -= lambda;
  std::vector<C> best;
  double best_norm = -1.0;
  for (std::size_t col = 0; col < n; ++col) {
    // Column `col` of the adjugate: cofactors C(col, r) for r = 0..n-1.
    std::vector<C> v(n);
    for (std::size_t r = 0; r < n; ++r) {
      Mat minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col) continue;
        std::vector<C> rowv;
        for (std::size_t j = 0; j < n; ++j)
          if (j != r) rowv.push_back(m[i][j]);
        minor.push_back(rowv);
      }
      v[r] = ((r + col) % 2 ? -1.0 : 1.0) * det(minor);
    }
    double nn = 0.0;
    for (C x : v) nn += std::norm(x);
    if (nn > best_norm) {
      best_norm = nn;
      best = v;
    }
  }
  const double len = std::sqrt(best_norm);
  for (C& x : best) x /= len;
  return best;
}

// exp(-i H dt) by scaling and squaring a truncated Taylor series.
inline Mat expm_taylor(const Mat& h, double dt) {
  const std::size_t n = h.size();
  Mat a = zeros(n);
  double norm1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = C(0.0, -dt) * h[i][j];
      row += std::abs(a[i][j]);
    }
    norm1 = std::max(norm1, row);
  }
  int squarings = 0;
  while (norm1 > 0.25) {
    norm1 /= 2.0;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& r : a)
    for (auto& x : r) x *= scale;
  Mat sum = identity(n), term = identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = mul(term, a);
    for (auto& r : term)
      for (auto& x : r) x /= static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  return sum;
}

// S^2 for two spin-1/2 particles via Pauli matrices: 3/2 + (sigma1 . sigma2)/2.
inline Mat s2_pauli() {
  const C i(0.0, 1.0);
  const Mat sx{{0.0, 1.0}, {1.0, 0.0}};
  const Mat sy{{0.0, -i}, {i, 0.0}};
  const Mat sz{{1.0, 0.0}, {0.0, -1.0}};
  Mat out = zeros(4);
  for (const Mat* s : {&sx, &sy, &sz})
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) out[2 * a + c][2 * b + d] += 0.5 * (*s)[a][b] * (*s)[c][d];
  for (int k = 0; k < 4; ++k) out[k][k] += 1.5;
  return out;
}

inline C expect(const Mat& m, const std::vector<C>& v) {
  C s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += std::conj(v[i]) * m[i][j] * v[j];
  return s;
}

}  // namespace oracle
