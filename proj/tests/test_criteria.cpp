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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qent/criteria.hpp"
#include "qent/measures.hpp"
#include "qent/pauli.hpp"
#include "qent/states.hpp"

using namespace qent;

namespace {
Mat3d t_of(const DensityMatrix& rho) { return t_matrix(correlation_matrix(rho)); }
}  // namespace

TEST_CASE("trace_norm_test verdicts") {
  const auto bell = trace_norm_test(t_of(density_from_pure(bell_psi_plus())));
  CHECK(bell.verdict == Verdict::entangled);
  CHECK(bell.statistic == Catch::Approx(3.0).margin(1e-9));
  CHECK(bell.margin == Catch::Approx(2.0).margin(1e-9));

  const auto mixed = trace_norm_test(t_of(0.25 * Mat4c::identity()));
  CHECK(mixed.verdict == Verdict::not_detected);
  CHECK(mixed.margin == Catch::Approx(-1.0).margin(1e-12));

  const auto w = trace_norm_test(t_of(werner(0.5)));
  CHECK(w.verdict == Verdict::entangled);
  CHECK(w.statistic == Catch::Approx(1.5).margin(1e-9));
  CHECK(w.margin == Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("verdicts inside the boundary band are flagged, not detected") {
  const Mat3d just_above = Mat3d::diagonal({1.0 + 5e-9, 0, 0});
  const auto r = trace_norm_test(just_above);
  CHECK(r.verdict == Verdict::not_detected);
  CHECK(r.boundary);
  CHECK(r.margin > 0.0);

  const Mat3d clearly_above = Mat3d::diagonal({1.0 + 5e-8, 0, 0});
  const auto r2 = trace_norm_test(clearly_above);
  CHECK(r2.verdict == Verdict::entangled);
  CHECK_FALSE(r2.boundary);

  // A looser boundary tolerance widens the band.
  const auto r3 = trace_norm_test(clearly_above, 1e-6);
  CHECK(r3.verdict == Verdict::not_detected);
  CHECK(r3.boundary);
}

TEST_CASE("chsh_horodecki statistic is s1^2 + s2^2") {
  const auto bell = chsh_horodecki(t_of(density_from_pure(bell_phi_plus())));
  CHECK(bell.statistic == Catch::Approx(2.0).margin(1e-9));
  CHECK(bell.verdict == Verdict::entangled);

  const auto w5 = chsh_horodecki(t_of(werner(0.5)));
  CHECK(w5.statistic == Catch::Approx(0.5).margin(1e-9));
  CHECK(w5.verdict == Verdict::not_detected);

  const auto w8 = chsh_horodecki(t_of(werner(0.8)));
  CHECK(w8.statistic == Catch::Approx(1.28).margin(1e-9));
  CHECK(w8.verdict == Verdict::entangled);
}

TEST_CASE("bell_expectation basics") {
  const CorrelationMatrix r = correlation_matrix(0.25 * Mat4c::identity());
  Rng rng(101);
  for (int k = 0; k < 20; ++k) {
    const BellSettings s{rng.unit_vector(), rng.unit_vector(), rng.unit_vector(),
                         rng.unit_vector()};
    CHECK(std::abs(bell_expectation(r, s)) < 1e-12);
  }

  const CorrelationMatrix rp =
      correlation_matrix(density_from_pure({{Complex(1), {}, {}, {}}}));
  for (int k = 0; k < 200; ++k) {
    const BellSettings s{rng.unit_vector(), rng.unit_vector(), rng.unit_vector(),
                         rng.unit_vector()};
    CHECK(std::abs(bell_expectation(rp, s)) <= 2.0 + 1e-9);
  }

  CHECK_THROWS_AS(
      bell_expectation(r, BellSettings{Vec3{{2, 0, 0}}, Vec3{{0, 1, 0}}, Vec3{{0, 0, 1}},
                                       Vec3{{1, 0, 0}}}),
      NonUnitVector);
}

TEST_CASE("bell_maximize reaches the Tsirelson value on a Bell state") {
  const auto r = correlation_matrix(density_from_pure(bell_phi_plus()));
  const auto best = bell_maximize(r);
  CHECK(best.value == Catch::Approx(2.0 * std::sqrt(2.0)).margin(1e-6));
  // The reported maximum is attained by the reported settings.
  CHECK(bell_expectation(r, best.settings) == Catch::Approx(best.value).margin(1e-12));
}

TEST_CASE("bell_maximize boundary Werner state sits exactly at 2") {
  const auto r = correlation_matrix(werner(1.0 / std::sqrt(2.0)));
  CHECK(bell_maximize(r).value == Catch::Approx(2.0).margin(1e-6));
}

TEST_CASE("bell_maximize agrees with 2 sqrt(s1^2 + s2^2) on random states") {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho = random_mixed(rng, 1 + (trial % 4));
    const auto r = correlation_matrix(rho);
    const Vec3 s = svd3(t_matrix(r));
    const double expected = 2.0 * std::sqrt(s[0] * s[0] + s[1] * s[1]);
    CHECK(bell_maximize(r, 10).value == Catch::Approx(expected).margin(1e-6));
  }
}

TEST_CASE("bell_maximize dominates random settings") {
  Rng rng(107);
  const DensityMatrix rho = random_mixed(rng, 2);
  const auto r = correlation_matrix(rho);
  const double best = bell_maximize(r).value;
  for (int k = 0; k < 10000; ++k) {
    const BellSettings s{rng.unit_vector(), rng.unit_vector(), rng.unit_vector(),
                         rng.unit_vector()};
    CHECK(bell_expectation(r, s) <= best + 1e-6);
  }
}

TEST_CASE("ppt_test matches the closed form on the depolarized Schmidt family") {
  for (double a : {0.1, 0.4, 1.0 / std::sqrt(2.0), 0.9}) {
    const double b = std::sqrt(1.0 - a * a);
    for (double p : {0.0, 0.3, 1.0 / 3.0, 0.8, 1.0}) {
      const auto report = ppt_test(depolarized_schmidt({a, p}));
      const double expected_min = (1.0 - p) / 4.0 - a * b * p;
      CHECK(-report.statistic == Catch::Approx(expected_min).margin(1e-10));
    }
  }
}

TEST_CASE("ppt_test flags the Werner threshold as a boundary") {
  const auto report = ppt_test(werner(1.0 / 3.0));
  CHECK(report.verdict == Verdict::not_detected);
  CHECK(report.boundary);
  CHECK(std::abs(report.statistic) < 1e-10);
}

TEST_CASE("ppt_test never detects separable draws") {
  Rng rng(109);
  for (int trial = 0; trial < 500; ++trial) {
    const auto report = ppt_test(random_separable(rng, 1 + static_cast<int>(rng.index(8))));
    CHECK(report.verdict == Verdict::not_detected);
  }
}

TEST_CASE("both partial transposes have the same spectrum") {
  Rng rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_mixed(rng, 1 + (trial % 4));
    const auto ea = eig_hermitian(partial_transpose_a(rho));
    const auto eb = eig_hermitian(partial_transpose_b(rho));
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(ea.values[k] - eb.values[k]) < 1e-10);
  }
}

TEST_CASE("witness_matrix is the fixed XX+YY-ZZ witness") {
  const Mat4c w = witness_matrix();
  CHECK(w.hermiticity_defect() == 0.0);
  Mat4c expected;
  expected(0, 0) = Complex(2);
  expected(1, 2) = Complex(-2);
  expected(2, 1) = Complex(-2);
  expected(3, 3) = Complex(2);
  CHECK((w - expected).max_abs() < 1e-15);

  const double on_psi_plus = witness_expectation(w, density_from_pure(bell_psi_plus()));
  CHECK(on_psi_plus == Catch::Approx(-2.0).margin(1e-14));
}

TEST_CASE("witness_matrix is nonnegative on separable draws") {
  Rng rng(127);
  const Mat4c w = witness_matrix();
  for (int trial = 0; trial < 2000; ++trial) {
    const DensityMatrix rho = random_separable(rng, 1 + static_cast<int>(rng.index(8)));
    CHECK(witness_expectation(w, rho) >= -1e-9);
  }
}

TEST_CASE("witness_from_diagonal_signs reproduces the fixed witness on psi+") {
  const Mat3d t = t_of(density_from_pure(bell_psi_plus()));
  const Mat4c w = witness_from_diagonal_signs(t);
  CHECK((w - witness_matrix()).max_abs() < 1e-12);
}

TEST_CASE("witness_from_diagonal_signs gives 1 - |T| on the Schmidt family") {
  for (double a : {0.2, 0.8, 1.0 / std::sqrt(2.0)}) {
    const double b = std::sqrt(1.0 - a * a);
    for (double p : {0.0, 0.4, 1.0}) {
      const DensityMatrix rho = depolarized_schmidt({a, p});
      const Mat3d t = t_of(rho);
      const Mat4c w = witness_from_diagonal_signs(t);
      CHECK(witness_expectation(w, rho) ==
            Catch::Approx(1.0 - (4.0 * a * b * p + p)).margin(1e-9));
      CHECK(witness_expectation(w, rho) ==
            Catch::Approx(1.0 - trace_norm3(t)).margin(1e-9));
    }
  }
  // Maximally mixed: T = 0, W = I, expectation 1.
  CHECK(witness_expectation(witness_from_diagonal_signs(Mat3d{}), 0.25 * Mat4c::identity()) ==
        Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("witness_from_diagonal_signs rejects non-diagonal T") {
  Mat3d t;
  t(0, 1) = 0.5;
  CHECK_THROWS_AS(witness_from_diagonal_signs(t), NotDiagonal);
}

TEST_CASE("run_all on the named states") {
  const auto bell = run_all(density_from_pure(bell_psi_plus()));
  REQUIRE(bell.size() == 5);
  CHECK(bell[0].name == "trace_norm");
  CHECK(bell[1].name == "chsh_horodecki");
  CHECK(bell[2].name == "ppt");
  CHECK(bell[3].name == "witness");
  CHECK(bell[4].name == "concurrence_lower_bound");
  for (const auto& report : bell) CHECK(report.verdict == Verdict::entangled);

  const auto w5 = run_all(werner(0.5));
  CHECK(w5[0].verdict == Verdict::entangled);      // trace norm 1.5
  CHECK(w5[1].verdict == Verdict::not_detected);   // chsh 0.5
  CHECK(w5[2].verdict == Verdict::entangled);      // ppt
  CHECK(w5[4].verdict == Verdict::entangled);      // lower bound 0.25

  const auto mixed = run_all(0.25 * Mat4c::identity());
  for (const auto& report : mixed) CHECK(report.verdict == Verdict::not_detected);
}

TEST_CASE("CHSH detection implies trace-norm detection") {
  Rng rng(131);
  int chsh_hits = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const DensityMatrix rho = random_mixed(rng, 1 + (trial % 4));
    const Mat3d t = t_of(rho);
    const Vec3 s = svd3(t);
    const double chsh = s[0] * s[0] + s[1] * s[1];
    const double tn = s[0] + s[1] + s[2];
    if (chsh > 1.0) {
      ++chsh_hits;
      CHECK(tn > 1.0);
    }
    // Inequality chain behind the inclusion: s1^2 + s2^2 <= |T| when |T| <= 1.
    if (tn <= 1.0) CHECK(chsh <= tn + 1e-12);
  }
  CHECK(chsh_hits > 0);  // the ensemble actually exercises the implication

  // Werner p = 0.5 certifies strictness.
  const Vec3 s = svd3(t_of(werner(0.5)));
  CHECK(s[0] + s[1] + s[2] == Catch::Approx(1.5).margin(1e-9));
  CHECK(s[0] * s[0] + s[1] * s[1] == Catch::Approx(0.5).margin(1e-9));
}
