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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace photonic {

using Complex = std::complex<double>;

/// Dense square complex matrix, row major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static CMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  CMatrix adjoint() const;
  double frobenius() const;
  double off_diagonal_frobenius() const;
  bool is_hermitian(double tol) const;

  std::vector<Complex> apply(std::span<const Complex> v) const;
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(Complex s, const CMatrix& a);

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

struct HermitianEigen {
  std::vector<double> values;  // ascending; ties keep the original diagonal order
  CMatrix vectors;             // column k belongs to values[k]
  int sweeps = 0;
};

/// Cyclic complex Jacobi for Hermitian matrices. Sweeps until the off-diagonal
/// Frobenius norm drops below rel_tol * ||H||_F. Each eigenvector is rotated
/// so its largest-magnitude component is real and positive.
HermitianEigen eigh(const CMatrix& h, double rel_tol = 1e-12, int max_sweeps = 100);

}  // namespace photonic
