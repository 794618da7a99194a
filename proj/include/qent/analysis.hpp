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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "qent/criteria.hpp"
#include "qent/measures.hpp"
#include "qent/pauli.hpp"
#include "qent/states.hpp"

namespace qent {

// Everything the analyze command reports for one state: the exact
// (noiseless) criteria plus the entanglement measures.
struct AnalysisReport {
  std::string state_descriptor;
  DensityMatrix rho;
  CorrelationMatrix correlation;
  std::vector<CriterionReport> criteria;
  EntanglementSummary summary;
  double elapsed_ms = 0;
};

inline AnalysisReport analyze(const DensityMatrix& rho, std::string descriptor,
                              double boundary_tol = kTol.boundary) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport report;
  report.state_descriptor = std::move(descriptor);
  report.rho = rho;
  report.correlation = correlation_matrix(rho);
  report.criteria = run_all(rho, boundary_tol);
  report.summary = entanglement_summary(rho);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

inline bool any_entangled(const AnalysisReport& report) {
  for (const auto& c : report.criteria)
    if (c.verdict == Verdict::entangled) return true;
  return false;
}

enum class Ensemble { pure, mixed, werner };

struct StudyRow {
  std::size_t index = 0;
  double param = 0;  // p for the werner grid, NaN otherwise
  double trace_norm = 0;
  double chsh = 0;  // s1^2 + s2^2
  double concurrence = 0;
  double lower_bound = 0;
  double ppt_min_eigenvalue = 0;
  bool detect_trace_norm = false;
  bool detect_chsh = false;
  bool detect_ppt = false;
  bool detect_witness = false;
};

struct StudyResult {
  Ensemble ensemble = Ensemble::pure;
  std::vector<StudyRow> rows;
  double rate_trace_norm = 0;
  double rate_chsh = 0;
  double rate_ppt = 0;
  double rate_witness = 0;
  // Rows with a CHSH violation but trace norm <= 1, compared at the
  // statistic level. Must be zero.
  std::size_t inclusion_violations = 0;
};

// Detection-rate study over an ensemble. The werner ensemble is the
// uniform p grid over [0, 1]; pure and mixed are seeded random draws
// (mixed cycles ranks 1..4). Per-row substreams keep the output
// independent of evaluation order.
inline StudyResult run_study(Ensemble ensemble, std::size_t count, std::uint64_t seed,
                             double boundary_tol = kTol.boundary) {
  if (count == 0) throw ParamOutOfRange("study: count must be positive");
  StudyResult result;
  result.ensemble = ensemble;
  result.rows.reserve(count);

  for (std::size_t k = 0; k < count; ++k) {
    StudyRow row;
    row.index = k;
    row.param = std::nan("");
    DensityMatrix rho;
    switch (ensemble) {
      case Ensemble::pure:
        rho = density_from_pure(random_pure(Rng::derive(seed, k)));
        break;
      case Ensemble::mixed:
        rho = random_mixed(Rng::derive(seed, k), 1 + static_cast<int>(k % 4));
        break;
      case Ensemble::werner:
        row.param = count == 1 ? 0.0
                               : static_cast<double>(k) / static_cast<double>(count - 1);
        rho = werner(row.param);
        break;
    }

    const Mat3d t = t_matrix(correlation_matrix(rho));
    const Vec3 s = svd3(t);
    row.trace_norm = s[0] + s[1] + s[2];
    row.chsh = s[0] * s[0] + s[1] * s[1];
    row.concurrence = concurrence(rho);
    row.lower_bound = 0.5 * (row.trace_norm - 1.0);
    row.ppt_min_eigenvalue = -ppt_test(rho, boundary_tol).statistic;
    row.detect_trace_norm = row.trace_norm > 1.0 + boundary_tol;
    row.detect_chsh = row.chsh > 1.0 + boundary_tol;
    row.detect_ppt = row.ppt_min_eigenvalue < -boundary_tol;
    row.detect_witness = witness_expectation(witness_matrix(), rho) < -boundary_tol;
    if (row.chsh > 1.0 && row.trace_norm <= 1.0) ++result.inclusion_violations;
    result.rows.push_back(row);
  }

  const double n = static_cast<double>(result.rows.size());
  for (const auto& row : result.rows) {
    result.rate_trace_norm += row.detect_trace_norm / n;
    result.rate_chsh += row.detect_chsh / n;
    result.rate_ppt += row.detect_ppt / n;
    result.rate_witness += row.detect_witness / n;
  }
  return result;
}

namespace detail {
inline std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace detail

// Byte-stable CSV rendering: per-state rows, then a detection-rate row.
inline std::string study_csv(const StudyResult& result) {
  std::string out =
      "index,param,trace_norm,chsh,concurrence,lower_bound,ppt_min_eig,"
      "trace_norm_detect,chsh_detect,ppt_detect,witness_detect\n";
  for (const auto& r : result.rows) {
    out += std::to_string(r.index);
    out += ',' + detail::csv_number(r.param);
    out += ',' + detail::csv_number(r.trace_norm);
    out += ',' + detail::csv_number(r.chsh);
    out += ',' + detail::csv_number(r.concurrence);
    out += ',' + detail::csv_number(r.lower_bound);
    out += ',' + detail::csv_number(r.ppt_min_eigenvalue);
    out += r.detect_trace_norm ? ",1" : ",0";
    out += r.detect_chsh ? ",1" : ",0";
    out += r.detect_ppt ? ",1" : ",0";
    out += r.detect_witness ? ",1" : ",0";
    out += '\n';
  }
  out += "rate,,,,,,";
  out += ',' + detail::csv_number(result.rate_trace_norm);
  out += ',' + detail::csv_number(result.rate_chsh);
  out += ',' + detail::csv_number(result.rate_ppt);
  out += ',' + detail::csv_number(result.rate_witness);
  out += '\n';
  return out;
}

}  // namespace qent
