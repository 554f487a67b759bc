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
#include <string>

#include "photonic/labels.hpp"

namespace photonic {

/// Two spin-1/2 constituents (the last two, m-1 and m) times the two
/// label-permuted partite products P1 = |phi_{..m-1}>|phi_m>, P2 = |phi_{..m}>|phi_{m-1}>.
/// Spin order: aa, ab, ba, bb with the first letter on constituent m-1.
struct SpinSpaceFunction {
  std::string name;
  std::array<Complex, 4> spin{};
  std::array<Complex, 2> space{};

  /// Full 8-component product, index = 2 * spin + space.
  std::array<Complex, 8> total() const;
  double norm() const;
};

enum class PermuteWhich { spin, space, both };

SpinSpaceFunction singlet();
/// ms in {-1, 0, +1}; throws invalid_argument otherwise.
SpinSpaceFunction triplet(int ms);
SpinSpaceFunction permute_labels(const SpinSpaceFunction& f, PermuteWhich which);

/// <f|S^2|f> and <f|S_z|f> over the spin factor, with S = S1 + S2 built from
/// the spin-1/2 matrices.
double s2_expectation(const SpinSpaceFunction& f);
double s2_variance(const SpinSpaceFunction& f);
double sz_expectation(const SpinSpaceFunction& f);

/// <f|g> over the full product space.
Complex inner(const SpinSpaceFunction& f, const SpinSpaceFunction& g);

/// "(1/sqrt2)[ab - ba] x (1/sqrt2)[P1 + P2]" style rendering.
std::string pretty(const SpinSpaceFunction& f);

}  // namespace photonic
