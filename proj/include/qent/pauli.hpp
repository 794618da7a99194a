// Copyright 2026 The qent authors
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

#include "qent/matrix.hpp"
#include "qent/states.hpp"

namespace qent {

// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z (standard convention).
inline const Mat2c& pauli(int k) {
  static const std::array<Mat2c, 4> sigma = [] {
    std::array<Mat2c, 4> s{};
    s[0] = Mat2c::identity();
    s[1](0, 1) = Complex(1);
    s[1](1, 0) = Complex(1);
    s[2](0, 1) = Complex(0, -1);
    s[2](1, 0) = Complex(0, 1);
    s[3](0, 0) = Complex(1);
    s[3](1, 1) = Complex(-1);
    return s;
  }();
  return sigma[static_cast<std::size_t>(k)];
}

// sigma_i (x) sigma_j, cached.
inline const Mat4c& pauli_pair(int i, int j) {
  static const std::array<Mat4c, 16> pairs = [] {
    std::array<Mat4c, 16> p{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) p[static_cast<std::size_t>(4 * a + b)] = kron(pauli(a), pauli(b));
    return p;
  }();
  return pairs[static_cast<std::size_t>(4 * i + j)];
}

// Real 4x4 matrix R with R[i][j] = Tr(rho sigma_i (x) sigma_j). R[0][0] = 1
// for unit-trace rho; the lower-right 3x3 block is the T matrix and the
// first row/column hold the local Bloch vectors.
using CorrelationMatrix = Mat4d;

inline CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
  CorrelationMatrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          trace_product(rho, pauli_pair(i, j)).real();
  return r;
}

inline Mat3d t_matrix(const CorrelationMatrix& r) {
  Mat3d t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = r(i + 1, j + 1);
  return t;
}

// Inverse of correlation_matrix: rho = 1/4 sum_ij R[i][j] sigma_i (x) sigma_j.
// Hermitian and unit-trace by construction, but not necessarily PSD when R
// did not come from a physical state (e.g. a noisy estimate); callers check
// with validate() where that matters.
inline DensityMatrix density_from_correlation(const CorrelationMatrix& r) {
  DensityMatrix rho;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double w = 0.25 * r(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (w == 0.0) continue;
      rho += w * pauli_pair(i, j);
    }
  return rho;
}

struct BlochPair {
  Vec3 a;  // first subsystem:  (R[1][0], R[2][0], R[3][0])
  Vec3 b;  // second subsystem: (R[0][1], R[0][2], R[0][3])
};

inline BlochPair bloch_vectors(const CorrelationMatrix& r) {
  return {{{r(1, 0), r(2, 0), r(3, 0)}}, {{r(0, 1), r(0, 2), r(0, 3)}}};
}

}  // namespace qent
