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
#include <cstddef>
#include <numeric>

#include "qent/errors.hpp"
#include "qent/matrix.hpp"
#include "qent/tolerances.hpp"

namespace qent {

template <typename Scalar, std::size_t N>
struct Eigensystem {
  std::array<double, N> values{};     // descending
  SquareMatrix<Scalar, N> vectors{};  // orthonormal columns, values[k] <-> column k
};

namespace detail {

template <typename Scalar, std::size_t N>
double off_diagonal_norm(const SquareMatrix<Scalar, N>& a) {
  double s = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += abs_sq(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

// Eigendecomposition of a Hermitian (or real symmetric) matrix by cyclic
// Jacobi rotations. Fixed dimensions 2..4 make this both simple and
// accurate: convergence is quadratic, and the stop criterion is an
// off-diagonal Frobenius norm below kTol.jacobi_off_norm.
template <typename Scalar, std::size_t N>
Eigensystem<Scalar, N> eig_hermitian(const SquareMatrix<Scalar, N>& m) {
  if (m.hermiticity_defect() > kTol.hermiticity)
    throw NotHermitian("eig_hermitian: matrix is not Hermitian within tolerance");

  using Mat = SquareMatrix<Scalar, N>;
  // Work on the Hermitian part so roundoff asymmetry cannot drift.
  Mat a = Scalar(0.5) * (m + m.adjoint());
  Mat v = Mat::identity();

  for (int sweep = 0; sweep < kTol.jacobi_max_sweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) < kTol.jacobi_off_norm) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq < 1e-300) continue;
        // Unitary plane rotation G zeroing a(p,q) in G^dagger * A * G.
        const Scalar phase = a(p, q) * Scalar(1.0 / apq);
        const double app = detail::real_part(a(p, p));
        const double aqq = detail::real_part(a(q, q));
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Mat g = Mat::identity();
        g(p, p) = Scalar(c);
        g(q, q) = Scalar(c);
        g(p, q) = Scalar(s) * phase;
        g(q, p) = Scalar(-s) * detail::conjugate(phase);

        a = g.adjoint() * a * g;
        v = v * g;
      }
    }
    // Restore exact Hermitian structure once per sweep.
    a = Scalar(0.5) * (a + a.adjoint());
  }

  Eigensystem<Scalar, N> out;
  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::array<double, N> diag{};
  for (std::size_t i = 0; i < N; ++i) diag[i] = detail::real_part(a(i, i));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return diag[l] > diag[r]; });
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

// Hermitian PSD square root via the spectral decomposition. Eigenvalues in
// [psd_reject, 0) are clipped to zero; anything lower is rejected.
template <typename Scalar, std::size_t N>
SquareMatrix<Scalar, N> sqrtm_psd(const SquareMatrix<Scalar, N>& m) {
  const auto es = eig_hermitian(m);
  std::array<double, N> roots{};
  for (std::size_t k = 0; k < N; ++k) {
    if (es.values[k] < kTol.psd_reject)
      throw NotPSD("sqrtm_psd: eigenvalue below PSD tolerance");
    roots[k] = std::sqrt(std::max(es.values[k], 0.0));
  }
  const auto d = SquareMatrix<Scalar, N>::diagonal(roots);
  return es.vectors * d * es.vectors.adjoint();
}

// Full SVD of a real 3x3 matrix: t = u * diag(values) * v^T with
// values[0] >= values[1] >= values[2] >= 0 and orthonormal u, v.
struct Svd3 {
  Vec3 values{};
  Mat3d u{};
  Mat3d v{};
};

inline Svd3 svd3_full(const Mat3d& t) {
  // Right singular vectors from the spectral decomposition of t^T t. The
  // singular values are taken as |t v_i| rather than sqrt(eigenvalue): the
  // two agree exactly in real arithmetic, but |t v_i| does not blow
  // eigenvalue roundoff up to sqrt(eps) when t is rank-deficient.
  const Mat3d m = t.transpose() * t;
  const auto es = eig_hermitian(m);

  Svd3 r;
  std::array<Vec3, 3> tv;
  for (std::size_t k = 0; k < 3; ++k) {
    const Vec3 vk = column(es.vectors, k);
    tv[k] = apply(t, vk);
    r.values[k] = norm(tv[k]);
    for (std::size_t i = 0; i < 3; ++i) r.v(i, k) = vk[i];
  }
  // Mixing inside (near-)degenerate eigenspaces can permute near-equal
  // values; restore descending order.
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = k + 1; l < 3; ++l)
      if (r.values[l] > r.values[k]) {
        std::swap(r.values[k], r.values[l]);
        std::swap(tv[k], tv[l]);
        for (std::size_t i = 0; i < 3; ++i) std::swap(r.v(i, k), r.v(i, l));
      }

  // Left singular vectors: normalized t v_k, orthonormalized in order.
  // Directions with negligible singular value are completed from the
  // coordinate basis; they carry no weight in the reconstruction.
  std::array<Vec3, 3> u;
  std::size_t built = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    Vec3 cand = tv[k];
    for (std::size_t j = 0; j < built; ++j) cand = cand - dot(u[j], cand) * u[j];
    const double reliable = std::max(0.5 * r.values[k], 1e-290);
    if (norm(cand) > reliable) {
      u[built++] = normalized(cand);
      continue;
    }
    double best = -1;
    Vec3 best_res;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      Vec3 e{};
      e[axis] = 1;
      for (std::size_t j = 0; j < built; ++j) e = e - dot(u[j], e) * u[j];
      if (norm(e) > best) {
        best = norm(e);
        best_res = e;
      }
    }
    u[built++] = normalized(best_res);
  }
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i) r.u(i, k) = u[k][i];
  return r;
}

inline Vec3 svd3(const Mat3d& t) { return svd3_full(t).values; }

// Trace norm: the sum of all singular values.
inline double trace_norm3(const Mat3d& t) {
  const Vec3 s = svd3(t);
  return s[0] + s[1] + s[2];
}

}  // namespace qent
