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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qent/matrix.hpp"

namespace qent {

namespace detail {
// splitmix64 finalizer, used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace detail

// Deterministic random source. mt19937_64 is fully specified by the
// standard and the variate transforms below are hand-rolled, so a given
// seed reproduces the same values on any platform. Each consumer owns its
// generator; nothing here is shared.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Independent substream seed for (seed, stream index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return detail::mix64(detail::mix64(seed) ^ detail::mix64(stream + 1));
  }

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (the spare is cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double theta = 2.0 * 3.14159265358979323846 * uniform();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Complex gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  // Uniform on the unit sphere.
  Vec3 unit_vector() {
    const double z = 1.0 - 2.0 * uniform();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * 3.14159265358979323846 * uniform();
    return {{r * std::cos(phi), r * std::sin(phi), z}};
  }

  // Uniform on the probability simplex (normalized exponentials).
  std::vector<double> simplex_weights(std::size_t n) {
    std::vector<double> w(n);
    double total = 0;
    for (auto& x : w) {
      x = -std::log(1.0 - uniform());
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }

  // Uniform integer in [0, bound).
  std::size_t index(std::size_t bound) {
    const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(bound));
    return k < bound ? k : bound - 1;
  }

  // Binomial draw; used by the bootstrap resampler, where cross-platform
  // bit reproducibility is not part of the contract (per-build determinism
  // is, and std::binomial_distribution provides that).
  long binomial(long n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    std::binomial_distribution<long> d(n, p);
    return d(eng_);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace qent
