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
#include <complex>
#include <cstddef>

namespace qent {

using Complex = std::complex<double>;

namespace detail {
inline double conjugate(double x) { return x; }
inline Complex conjugate(const Complex& z) { return std::conj(z); }
inline double real_part(double x) { return x; }
inline double real_part(const Complex& z) { return z.real(); }
inline double abs_sq(double x) { return x * x; }
inline double abs_sq(const Complex& z) { return std::norm(z); }
}  // namespace detail

// Dense fixed-size square matrix, row-major. Everything here is a plain
// O(N^3) loop; the sizes are 2, 3 and 4, so nothing fancier is worth it.
template <typename Scalar, std::size_t N>
class SquareMatrix {
 public:
  using value_type = Scalar;
  static constexpr std::size_t dim = N;

  SquareMatrix() = default;  // zero matrix
  explicit SquareMatrix(const std::array<Scalar, N * N>& entries) : e_(entries) {}

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = Scalar(1);
    return m;
  }

  static SquareMatrix diagonal(const std::array<double, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = Scalar(d[i]);
    return m;
  }

  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }

  const std::array<Scalar, N * N>& entries() const { return e_; }

  SquareMatrix operator+(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }

  SquareMatrix operator-(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) e_[k] += o.e_[k];
    return *this;
  }

  SquareMatrix operator*(const SquareMatrix& o) const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Scalar a = (*this)(i, k);
        if (a == Scalar(0)) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  SquareMatrix transpose() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  SquareMatrix conjugate() const {
    SquareMatrix r;
    for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = detail::conjugate(e_[k]);
    return r;
  }

  SquareMatrix adjoint() const { return conjugate().transpose(); }

  Scalar trace() const {
    Scalar t(0);
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& v : e_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& v : e_) s += detail::abs_sq(v);
    return std::sqrt(s);
  }

  // max entrywise |M - M^dagger|
  double hermiticity_defect() const {
    double m = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        m = std::max(m, std::abs((*this)(i, j) - detail::conjugate((*this)(j, i))));
    return m;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Scalar, N * N> e_{};
};

template <typename Scalar, std::size_t N>
SquareMatrix<Scalar, N> operator*(const Scalar& s, const SquareMatrix<Scalar, N>& m) {
  SquareMatrix<Scalar, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = s * m(i, j);
  return r;
}

template <std::size_t N>
SquareMatrix<Complex, N> operator*(double s, const SquareMatrix<Complex, N>& m) {
  return Complex(s) * m;
}

// Tr(a * b) without forming the product.
template <typename Scalar, std::size_t N>
Scalar trace_product(const SquareMatrix<Scalar, N>& a, const SquareMatrix<Scalar, N>& b) {
  Scalar t(0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) t += a(i, k) * b(k, i);
  return t;
}

// Kronecker product: (a (x) b)[Mi+k][Mj+l] = a[i][j] * b[k][l].
template <typename Scalar, std::size_t N, std::size_t M>
SquareMatrix<Scalar, N * M> kron(const SquareMatrix<Scalar, N>& a,
                                 const SquareMatrix<Scalar, M>& b) {
  SquareMatrix<Scalar, N * M> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < M; ++k)
        for (std::size_t l = 0; l < M; ++l) r(M * i + k, M * j + l) = a(i, j) * b(k, l);
  return r;
}

using Mat2c = SquareMatrix<Complex, 2>;
using Mat4c = SquareMatrix<Complex, 4>;
using Mat3d = SquareMatrix<double, 3>;
using Mat4d = SquareMatrix<double, 4>;

// Real 3-vector for Bloch vectors and Bell measurement directions.
struct Vec3 {
  std::array<double, 3> c{};

  double& operator[](std::size_t i) { return c[i]; }
  double operator[](std::size_t i) const { return c[i]; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}};
  }
  friend Vec3 operator*(double t, const Vec3& v) {
    return {{t * v.c[0], t * v.c[1], t * v.c[2]}};
  }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return {{v[0] / n, v[1] / n, v[2] / n}};
}

inline Vec3 apply(const Mat3d& m, const Vec3& v) {
  Vec3 r;
  for (std::size_t i = 0; i < 3; ++i)
    r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  return r;
}

inline Vec3 apply_transpose(const Mat3d& m, const Vec3& v) {
  Vec3 r;
  for (std::size_t i = 0; i < 3; ++i)
    r[i] = m(0, i) * v[0] + m(1, i) * v[1] + m(2, i) * v[2];
  return r;
}

inline Vec3 column(const Mat3d& m, std::size_t j) {
  return {{m(0, j), m(1, j), m(2, j)}};
}

}  // namespace qent
