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
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qent/decompositions.hpp"
#include "qent/errors.hpp"
#include "qent/pauli.hpp"
#include "qent/rng.hpp"
#include "qent/states.hpp"

namespace qent {

// Fixed measurement budgets. full9 needs no prior knowledge; the schmidt
// strategies assume a depolarized Schmidt-basis state (diagonal T with
// T11 = T22 up to sign), pure3_local assumes a pure state.
enum class Strategy { full9, schmidt3, schmidt2, pure3_local };

inline std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::full9: return "full9";
    case Strategy::schmidt3: return "schmidt3";
    case Strategy::schmidt2: return "schmidt2";
    case Strategy::pure3_local: return "pure3_local";
  }
  return "?";
}

struct MeasurementPlan {
  Strategy strategy = Strategy::full9;
  std::vector<std::pair<int, int>> settings;
  long shots_per_setting = 0;
};

inline MeasurementPlan make_plan(Strategy strategy, long shots_per_setting) {
  if (shots_per_setting < 1) throw ParamOutOfRange("plan needs at least one shot per setting");
  MeasurementPlan plan;
  plan.strategy = strategy;
  plan.shots_per_setting = shots_per_setting;
  switch (strategy) {
    case Strategy::full9:
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) plan.settings.emplace_back(i, j);
      break;
    case Strategy::schmidt3:
      plan.settings = {{1, 1}, {2, 2}, {3, 3}};
      break;
    case Strategy::schmidt2:
      plan.settings = {{1, 1}, {3, 3}};
      break;
    case Strategy::pure3_local:
      plan.settings = {{0, 1}, {0, 2}, {0, 3}};
      break;
  }
  return plan;
}

// Outcome tallies for one local observable pair. Outcomes are the four
// sign pairs (+,+), (+,-), (-,+), (-,-); index 0 on either side means that
// side measures nothing and its outcome is fixed at +1.
struct SettingRecord {
  int i = 0;
  int j = 0;
  long shots = 0;
  std::array<long, 4> counts{};  // pp, pm, mp, mm

  double r_hat() const {
    return static_cast<double>(counts[0] - counts[1] - counts[2] + counts[3]) /
           static_cast<double>(shots);
  }
  // Binomial standard error of the mean outcome product.
  double std_error() const {
    const double r = r_hat();
    return std::sqrt(std::max(0.0, 1.0 - r * r) / static_cast<double>(shots));
  }
};

struct MeasurementRecord {
  std::vector<SettingRecord> settings;
};

inline long total_shots(const MeasurementRecord& record) {
  long n = 0;
  for (const auto& s : record.settings) n += s.shots;
  return n;
}

// Joint outcome probabilities P(alpha, beta) = Tr(rho P_i^alpha (x) P_j^beta)
// with P^+- the +-1 eigenprojectors of the Pauli observable; expressed via
// the correlation entries, P = (1 + a R_i0 + b R_0j + ab R_ij) / 4.
inline std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || (i == 0 && j == 0))
    throw InvalidSetting("setting indices must be in 0..3 and not (0,0)");
  const double rij = trace_product(rho, pauli_pair(i, j)).real();

  std::array<double, 4> p{};
  if (i == 0) {
    // Side A measures nothing, outcome fixed at +1; rij is the B marginal.
    p = {0.5 * (1.0 + rij), 0.5 * (1.0 - rij), 0.0, 0.0};
  } else if (j == 0) {
    p = {0.5 * (1.0 + rij), 0.0, 0.5 * (1.0 - rij), 0.0};
  } else {
    const double ri0 = trace_product(rho, pauli_pair(i, 0)).real();
    const double r0j = trace_product(rho, pauli_pair(0, j)).real();
    int idx = 0;
    for (double alpha : {1.0, -1.0})
      for (double beta : {1.0, -1.0})
        p[static_cast<std::size_t>(idx++)] =
            0.25 * (1.0 + alpha * ri0 + beta * r0j + alpha * beta * rij);
  }
  double total = 0;
  for (auto& x : p) {
    x = std::max(0.0, x);  // clip tiny negatives from near-boundary states
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

inline SettingRecord sample_setting(const DensityMatrix& rho, int i, int j, long shots,
                                    std::uint64_t seed) {
  if (shots < 1) throw InvalidSetting("sample_setting: shots must be >= 1");
  const auto p = outcome_probabilities(rho, i, j);
  const std::array<double, 3> cum = {p[0], p[0] + p[1], p[0] + p[1] + p[2]};

  SettingRecord rec;
  rec.i = i;
  rec.j = j;
  rec.shots = shots;
  Rng rng(seed);
  for (long n = 0; n < shots; ++n) {
    const double u = rng.uniform();
    const int k = u < cum[0] ? 0 : (u < cum[1] ? 1 : (u < cum[2] ? 2 : 3));
    ++rec.counts[static_cast<std::size_t>(k)];
  }
  return rec;
}

// Executes a plan; each setting gets its own RNG substream derived from
// (seed, setting index), so serial and parallel execution agree.
inline MeasurementRecord run_plan(const DensityMatrix& rho, const MeasurementPlan& plan,
                                  std::uint64_t seed) {
  MeasurementRecord record;
  record.settings.reserve(plan.settings.size());
  for (std::size_t k = 0; k < plan.settings.size(); ++k) {
    const auto [i, j] = plan.settings[k];
    record.settings.push_back(
        sample_setting(rho, i, j, plan.shots_per_setting, Rng::derive(seed, k)));
  }
  return record;
}

enum class StatDecision { entangled, not_detected, inconclusive };

inline std::string_view decision_name(StatDecision d) {
  switch (d) {
    case StatDecision::entangled: return "entangled";
    case StatDecision::not_detected: return "not_detected";
    case StatDecision::inconclusive: return "inconclusive";
  }
  return "?";
}

// A threshold comparison under shot noise: entangled only when the
// estimate clears the threshold by z_required standard errors.
struct StatVerdict {
  std::string name;
  double statistic = 0;
  double threshold = 0;
  double sigma = 0;
  double z_margin = 0;
  double z_required = 3.0;
  StatDecision verdict = StatDecision::inconclusive;
};

inline constexpr std::uint64_t kDefaultBootstrapSeed = 0x0b00757261705eedull;

namespace detail {

// Multinomial resample of one tally at its empirical distribution,
// via conditional binomials.
inline std::array<long, 4> resample_counts(const std::array<long, 4>& counts, long shots,
                                           Rng& rng) {
  std::array<long, 4> out{};
  long remaining = shots;
  double mass = 1.0;
  const double n = static_cast<double>(shots);
  for (std::size_t k = 0; k < 3 && remaining > 0; ++k) {
    const double pk = static_cast<double>(counts[k]) / n;
    if (mass <= 0.0) break;
    const long draw = rng.binomial(remaining, std::min(1.0, pk / mass));
    out[k] = draw;
    remaining -= draw;
    mass -= pk;
  }
  out[3] = remaining;
  return out;
}

inline StatDecision decide(double z, double z_required) {
  if (z >= z_required) return StatDecision::entangled;
  if (z <= -z_required) return StatDecision::not_detected;
  return StatDecision::inconclusive;
}

inline double z_score(double statistic, double threshold, double sigma) {
  if (sigma > 1e-15) return (statistic - threshold) / sigma;
  if (statistic > threshold) return std::numeric_limits<double>::infinity();
  if (statistic < threshold) return -std::numeric_limits<double>::infinity();
  return 0.0;
}

// Pools duplicate settings and indexes them by (i, j).
inline std::map<std::pair<int, int>, SettingRecord> pool_settings(
    const MeasurementRecord& record) {
  std::map<std::pair<int, int>, SettingRecord> pooled;
  for (const auto& s : record.settings) {
    auto& slot = pooled[{s.i, s.j}];
    slot.i = s.i;
    slot.j = s.j;
    slot.shots += s.shots;
    for (std::size_t k = 0; k < 4; ++k) slot.counts[k] += s.counts[k];
  }
  return pooled;
}

template <typename Statistic>
StatVerdict bootstrap_verdict(std::string name, const std::vector<SettingRecord>& used,
                              Statistic statistic_of, double threshold, int bootstrap_reps,
                              double z_required, std::uint64_t seed) {
  std::vector<double> r(used.size());
  for (std::size_t k = 0; k < used.size(); ++k) r[k] = used[k].r_hat();

  StatVerdict v;
  v.name = std::move(name);
  v.statistic = statistic_of(r);
  v.threshold = threshold;
  v.z_required = z_required;

  Rng rng(Rng::derive(seed, 0));
  double sum = 0, sum_sq = 0;
  for (int rep = 0; rep < bootstrap_reps; ++rep) {
    for (std::size_t k = 0; k < used.size(); ++k) {
      const auto c = resample_counts(used[k].counts, used[k].shots, rng);
      r[k] = static_cast<double>(c[0] - c[1] - c[2] + c[3]) /
             static_cast<double>(used[k].shots);
    }
    const double s = statistic_of(r);
    sum += s;
    sum_sq += s * s;
  }
  if (bootstrap_reps > 1) {
    const double mean = sum / bootstrap_reps;
    const double var = std::max(0.0, (sum_sq - bootstrap_reps * mean * mean) /
                                         (bootstrap_reps - 1));
    v.sigma = std::sqrt(var);
  }
  v.z_margin = z_score(v.statistic, v.threshold, v.sigma);
  v.verdict = decide(v.z_margin, v.z_required);
  return v;
}

}  // namespace detail

// Plug-in trace-norm test on estimated correlations; needs the full 3x3
// block, i.e. a full9 record. Sigma comes from a nonparametric bootstrap
// over the per-setting outcome tallies (the trace norm is not smooth at
// degenerate singular values, so no delta method).
inline StatVerdict estimate_trace_norm(const MeasurementRecord& record, int bootstrap_reps = 1000,
                                       double z_required = 3.0,
                                       std::uint64_t seed = kDefaultBootstrapSeed) {
  const auto pooled = detail::pool_settings(record);
  std::vector<SettingRecord> used;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const auto it = pooled.find({i, j});
      if (it == pooled.end())
        throw IncompletePlan("estimate_trace_norm: record must cover all 9 correlation settings");
      used.push_back(it->second);
    }
  auto statistic = [](const std::vector<double>& r) {
    Mat3d t;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) t(i, j) = r[3 * i + j];
    return trace_norm3(t);
  };
  return detail::bootstrap_verdict("trace_norm_estimate", used, statistic, 1.0, bootstrap_reps,
                                   z_required, seed);
}

// Budget-reduced tests for depolarized Schmidt-basis states (prior
// knowledge: T diagonal, |T11| = |T22|). schmidt3 sums the three diagonal
// magnitudes; schmidt2 doubles the first one instead of measuring (2,2).
inline StatVerdict estimate_schmidt_family(const MeasurementRecord& record, Strategy strategy,
                                           int bootstrap_reps = 1000, double z_required = 3.0,
                                           std::uint64_t seed = kDefaultBootstrapSeed) {
  if (strategy != Strategy::schmidt3 && strategy != Strategy::schmidt2)
    throw InvalidSetting("estimate_schmidt_family: strategy must be schmidt3 or schmidt2");
  const auto pooled = detail::pool_settings(record);
  const bool three = strategy == Strategy::schmidt3;
  std::vector<std::pair<int, int>> needed =
      three ? std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}}
            : std::vector<std::pair<int, int>>{{1, 1}, {3, 3}};
  std::vector<SettingRecord> used;
  for (const auto& key : needed) {
    const auto it = pooled.find(key);
    if (it == pooled.end())
      throw IncompletePlan("estimate_schmidt_family: record does not match the strategy");
    used.push_back(it->second);
  }
  auto statistic = [three](const std::vector<double>& r) {
    return three ? std::abs(r[0]) + std::abs(r[1]) + std::abs(r[2])
                 : 2.0 * std::abs(r[0]) + std::abs(r[1]);
  };
  return detail::bootstrap_verdict(three ? "schmidt3_estimate" : "schmidt2_estimate", used,
                                   statistic, 1.0, bootstrap_reps, z_required, seed);
}

struct ConcurrenceEstimate {
  double value = 0;
  double sigma = 0;
};

// Pure-state concurrence from the local Bloch vector of one side:
// C = sqrt(1 - |bloch|^2), estimated from the three single-qubit settings.
inline ConcurrenceEstimate estimate_pure_concurrence(const MeasurementRecord& record,
                                                     int bootstrap_reps = 1000,
                                                     std::uint64_t seed = kDefaultBootstrapSeed) {
  const auto pooled = detail::pool_settings(record);
  std::vector<SettingRecord> used;
  for (int j = 1; j <= 3; ++j) {
    const auto it = pooled.find({0, j});
    if (it == pooled.end())
      throw IncompletePlan("estimate_pure_concurrence: record must cover (0,1), (0,2), (0,3)");
    used.push_back(it->second);
  }
  auto statistic = [](const std::vector<double>& r) {
    return std::sqrt(std::max(0.0, 1.0 - (r[0] * r[0] + r[1] * r[1] + r[2] * r[2])));
  };
  const auto v = detail::bootstrap_verdict("pure_concurrence", used, statistic, 0.0,
                                           bootstrap_reps, 3.0, seed);
  return {v.statistic, v.sigma};
}

// Cost factor f = (number of parameters) x (number of copies), with the
// convention that the copy count equals the parameter count. Full state
// tomography sits at 15 x 15 for comparison.
inline long cost_accounting(const MeasurementPlan& plan) {
  const long n = static_cast<long>(plan.settings.size());
  return n * n;
}

inline constexpr long kTomographyCost = 15 * 15;

}  // namespace qent
