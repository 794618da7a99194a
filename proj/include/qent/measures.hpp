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

#include <algorithm>
#include <array>
#include <cmath>

#include "qent/decompositions.hpp"
#include "qent/errors.hpp"
#include "qent/pauli.hpp"
#include "qent/states.hpp"

namespace qent {

struct EntanglementSummary {
  double concurrence = 0;
  double eof = 0;
  double lower_bound = 0;          // (|T| - 1)/2, negative when nothing is detected
  std::array<double, 4> tau{};     // descending spin-flip spectrum
};

// Spin-flip spectrum: tau_i^2 are the eigenvalues of rho * rho_tilde with
// rho_tilde = (sigma_2 x sigma_2) rho^* (sigma_2 x sigma_2). Computed
// through the Hermitian sandwich sqrt(rho) rho_tilde sqrt(rho), which has
// the same spectrum and keeps everything real and PSD.
inline std::array<double, 4> concurrence_taus(const DensityMatrix& rho) {
  const Mat4c yy = pauli_pair(2, 2);
  const Mat4c rho_tilde = yy * rho.conjugate() * yy;
  const Mat4c root = sqrtm_psd(rho);
  const auto es = eig_hermitian(root * rho_tilde * root);
  std::array<double, 4> tau{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double lambda = es.values[k] < kTol.tau_clip ? 0.0 : es.values[k];
    tau[k] = std::sqrt(lambda);
  }
  std::sort(tau.begin(), tau.end(), std::greater<>());
  return tau;
}

inline double concurrence(const DensityMatrix& rho) {
  const auto tau = concurrence_taus(rho);
  return std::max(0.0, tau[0] - tau[1] - tau[2] - tau[3]);
}

// Closed form for pure states: C = 2|ad - bc|.
inline double concurrence_pure(const PureState& psi) {
  if (std::abs(norm(psi) - 1.0) > kTol.normalization)
    throw NotNormalized("concurrence_pure: state is not normalized");
  return 2.0 * std::abs(psi.amp[0] * psi.amp[3] - psi.amp[1] * psi.amp[2]);
}

// Entanglement of formation from the concurrence, in bits:
// E_f = h((1 + sqrt(1 - C^2)) / 2) with h the binary entropy.
inline double eof(double c) {
  if (c < -1e-12 || c > 1.0 + 1e-12) throw COutOfRange("eof: concurrence must be in [0, 1]");
  c = std::clamp(c, 0.0, 1.0);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  auto plog2p = [](double p) { return p <= 0.0 ? 0.0 : p * std::log2(p); };
  return -plog2p(x) - plog2p(1.0 - x);
}

// (|T| - 1)/2; a lower bound for the concurrence, exact on pure states.
// Deliberately not clipped at zero: negative values mean "no detection".
inline double concurrence_lower_bound(const Mat3d& t) {
  return 0.5 * (trace_norm3(t) - 1.0);
}

struct BlochNormCheck {
  double norm_a = 0;
  double norm_b = 0;
  double predicted = 0;  // sqrt(1 - C^2)
};

// For a pure state both local Bloch vectors have norm sqrt(1 - C^2).
inline BlochNormCheck bloch_norm_check(const PureState& psi) {
  const auto r = correlation_matrix(density_from_pure(psi));
  const auto [va, vb] = bloch_vectors(r);
  const double c = concurrence_pure(psi);
  return {norm(va), norm(vb), std::sqrt(std::max(0.0, 1.0 - c * c))};
}

inline EntanglementSummary entanglement_summary(const DensityMatrix& rho) {
  EntanglementSummary s;
  s.tau = concurrence_taus(rho);
  s.concurrence = std::max(0.0, s.tau[0] - s.tau[1] - s.tau[2] - s.tau[3]);
  s.eof = eof(s.concurrence);
  s.lower_bound = concurrence_lower_bound(t_matrix(correlation_matrix(rho)));
  return s;
}

}  // namespace qent
