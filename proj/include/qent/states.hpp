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
#include <cmath>
#include <cstdint>

#include "qent/decompositions.hpp"
#include "qent/errors.hpp"
#include "qent/matrix.hpp"
#include "qent/rng.hpp"
#include "qent/tolerances.hpp"

namespace qent {

// Two-qubit pure state, amplitudes over |00>, |01>, |10>, |11>.
struct PureState {
  std::array<Complex, 4> amp{};
};

inline double norm(const PureState& psi) {
  double s = 0;
  for (const auto& z : psi.amp) s += std::norm(z);
  return std::sqrt(s);
}

inline PureState normalized(PureState psi) {
  const double n = norm(psi);
  if (n == 0.0) throw NotNormalized("cannot normalize the zero vector");
  for (auto& z : psi.amp) z /= n;
  return psi;
}

inline PureState bell_phi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{Complex(r), Complex(0), Complex(0), Complex(r)}};
}
inline PureState bell_phi_minus() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{Complex(r), Complex(0), Complex(0), Complex(-r)}};
}
inline PureState bell_psi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{Complex(0), Complex(r), Complex(r), Complex(0)}};
}
inline PureState bell_psi_minus() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{Complex(0), Complex(r), Complex(-r), Complex(0)}};
}

// a|00> + sqrt(1-a^2)|11> with a in [0, 1].
inline PureState schmidt_pure(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw ParamOutOfRange("Schmidt coefficient a must be in [0, 1]");
  return {{Complex(a), Complex(0), Complex(0), Complex(std::sqrt(1.0 - a * a))}};
}

using DensityMatrix = Mat4c;

inline DensityMatrix density_from_pure(const PureState& psi) {
  if (std::abs(norm(psi) - 1.0) > kTol.normalization)
    throw NotNormalized("density_from_pure: state is not normalized");
  DensityMatrix rho;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho(i, j) = psi.amp[i] * std::conj(psi.amp[j]);
  return rho;
}

struct SchmidtDepolarizedParams {
  double a = 0;  // Schmidt coefficient, b = sqrt(1 - a^2) implied
  double p = 0;  // survival probability of the depolarizing mixture
};

// rho = p |psi><psi| + (1-p) I/4 with psi = a|00> + b|11>.
inline DensityMatrix depolarized_schmidt(const SchmidtDepolarizedParams& params) {
  if (!(params.a >= 0.0 && params.a <= 1.0)) throw ParamOutOfRange("a must be in [0, 1]");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw ParamOutOfRange("p must be in [0, 1]");
  const DensityMatrix pure = density_from_pure(schmidt_pure(params.a));
  return params.p * pure + ((1.0 - params.p) * 0.25) * DensityMatrix::identity();
}

inline DensityMatrix werner(double p) {
  return depolarized_schmidt({1.0 / std::sqrt(2.0), p});
}

inline PureState random_pure(Rng& rng) {
  PureState psi;
  for (auto& z : psi.amp) z = rng.gaussian_complex();
  return normalized(psi);
}

inline PureState random_pure(std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(rng);
}

// rho = G G^dagger / Tr(G G^dagger) with G a 4 x rank complex Gaussian matrix.
inline DensityMatrix random_mixed(Rng& rng, int rank) {
  if (rank < 1 || rank > 4) throw ParamOutOfRange("random_mixed: rank must be in 1..4");
  std::array<std::array<Complex, 4>, 4> g{};
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < 4; ++r) g[c][r] = rng.gaussian_complex();
  DensityMatrix rho;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Complex s(0);
      for (int c = 0; c < rank; ++c) s += g[c][i] * std::conj(g[c][j]);
      rho(i, j) = s;
    }
  const double tr = rho.trace().real();
  return (1.0 / tr) * rho;
}

inline DensityMatrix random_mixed(std::uint64_t seed, int rank) {
  Rng rng(seed);
  return random_mixed(rng, rank);
}

// Convex mixture of product projectors built from independent uniform
// Bloch-sphere vectors on each side; mixture weights uniform on the simplex.
inline DensityMatrix random_separable(Rng& rng, int terms) {
  if (terms < 1) throw ParamOutOfRange("random_separable: terms must be >= 1");
  const auto weights = rng.simplex_weights(static_cast<std::size_t>(terms));
  auto bloch_projector = [](const Vec3& n) {
    Mat2c m;
    m(0, 0) = Complex(0.5 * (1.0 + n[2]));
    m(0, 1) = Complex(0.5 * n[0], -0.5 * n[1]);
    m(1, 0) = Complex(0.5 * n[0], 0.5 * n[1]);
    m(1, 1) = Complex(0.5 * (1.0 - n[2]));
    return m;
  };
  DensityMatrix rho;
  for (int k = 0; k < terms; ++k) {
    const Mat2c a = bloch_projector(rng.unit_vector());
    const Mat2c b = bloch_projector(rng.unit_vector());
    rho += weights[static_cast<std::size_t>(k)] * kron(a, b);
  }
  return rho;
}

inline DensityMatrix random_separable(std::uint64_t seed, int terms) {
  Rng rng(seed);
  return random_separable(rng, terms);
}

struct StateDiagnostics {
  double hermiticity_defect = 0;
  double trace_defect = 0;
  double min_eigenvalue = 0;
};

// Reports how far rho is from a valid density matrix; never throws.
inline StateDiagnostics validate(const DensityMatrix& rho) {
  StateDiagnostics d;
  d.hermiticity_defect = rho.hermiticity_defect();
  d.trace_defect = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  const auto es = eig_hermitian(Complex(0.5) * (rho + rho.adjoint()));
  d.min_eigenvalue = es.values[3];
  return d;
}

}  // namespace qent
