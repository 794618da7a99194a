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
#include <cstdio>
#include <optional>
#include <string>

#include <json.hpp>

#include "qent/analysis.hpp"
#include "qent/errors.hpp"
#include "qent/matrix.hpp"
#include "qent/measure_sim.hpp"
#include "qent/states.hpp"

namespace qent {

using Json = nlohmann::json;

// Complex numbers travel as two-element [re, im] arrays.
inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const Mat4c& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 4; ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Mat4c mat4c_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("expected a 4x4 matrix");
  Mat4c m;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4) throw ParseError("expected a 4x4 matrix");
    for (std::size_t k = 0; k < 4; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

inline Json to_json(const Mat4d& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 4; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

// A state input: exactly one of
//   {"pure": [[re,im] x4]}
//   {"density": [[[re,im] x4] x4]}
//   {"family": "depolarized_schmidt", "a": <real>, "p": <real>}
//   {"family": "werner", "p": <real>}
// Unrecognized keys are ignored, which lets an analyze report be fed back
// in as a density input.
struct StateInput {
  std::string descriptor;
  DensityMatrix rho;
  std::optional<PureState> pure;
};

inline StateInput state_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("state file must hold a JSON object");
  const int forms = static_cast<int>(j.contains("pure")) + static_cast<int>(j.contains("density")) +
                    static_cast<int>(j.contains("family"));
  if (forms != 1)
    throw ParseError("state must contain exactly one of \"pure\", \"density\", \"family\"");

  StateInput in;
  if (j.contains("pure")) {
    const auto& arr = j["pure"];
    if (!arr.is_array() || arr.size() != 4) throw ParseError("\"pure\" must hold 4 amplitudes");
    PureState psi;
    for (std::size_t k = 0; k < 4; ++k) psi.amp[k] = complex_from_json(arr[k]);
    const double defect = std::abs(norm(psi) - 1.0);
    if (defect > 1e-6) throw ParseError("pure state is not normalized (defect > 1e-6)");
    if (defect > 0.0) psi = normalized(psi);
    in.descriptor = "pure";
    in.pure = psi;
    in.rho = density_from_pure(psi);
    return in;
  }
  if (j.contains("density")) {
    const DensityMatrix rho = mat4c_from_json(j["density"]);
    const auto d = validate(rho);
    if (d.hermiticity_defect > 1e-8 || d.trace_defect > 1e-8 || d.min_eigenvalue < -1e-6) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "density matrix is not physical (hermiticity defect %.3g, trace defect %.3g, "
                    "min eigenvalue %.3g)",
                    d.hermiticity_defect, d.trace_defect, d.min_eigenvalue);
      throw ParseError(buf);
    }
    in.descriptor = "density";
    in.rho = rho;
    return in;
  }
  const std::string family = j["family"].get<std::string>();
  if (!j.contains("p") || !j["p"].is_number())
    throw ParseError("family state needs a numeric \"p\"");
  const double p = j["p"].get<double>();
  if (family == "werner") {
    in.descriptor = "werner(p=" + detail::csv_number(p) + ")";
    in.rho = werner(p);
    return in;
  }
  if (family == "depolarized_schmidt") {
    if (!j.contains("a") || !j["a"].is_number())
      throw ParseError("depolarized_schmidt needs a numeric \"a\"");
    const double a = j["a"].get<double>();
    in.descriptor =
        "depolarized_schmidt(a=" + detail::csv_number(a) + ",p=" + detail::csv_number(p) + ")";
    in.rho = depolarized_schmidt({a, p});
    return in;
  }
  throw ParseError("unknown family \"" + family + "\"");
}

// Measurement records:
// {"settings": [{"i":_, "j":_, "shots":_, "counts": {"pp":_, "pm":_, "mp":_, "mm":_}}, ...]}
inline bool looks_like_record(const Json& j) { return j.is_object() && j.contains("settings"); }

inline Json to_json(const MeasurementRecord& record) {
  Json settings = Json::array();
  for (const auto& s : record.settings) {
    settings.push_back({{"i", s.i},
                        {"j", s.j},
                        {"shots", s.shots},
                        {"counts",
                         {{"pp", s.counts[0]},
                          {"pm", s.counts[1]},
                          {"mp", s.counts[2]},
                          {"mm", s.counts[3]}}}});
  }
  return {{"settings", settings}};
}

inline MeasurementRecord record_from_json(const Json& j) {
  if (!looks_like_record(j) || !j["settings"].is_array())
    throw ParseError("record must hold a \"settings\" array");
  MeasurementRecord record;
  for (const auto& s : j["settings"]) {
    SettingRecord rec;
    try {
      rec.i = s.at("i").get<int>();
      rec.j = s.at("j").get<int>();
      rec.shots = s.at("shots").get<long>();
      const auto& c = s.at("counts");
      rec.counts = {c.at("pp").get<long>(), c.at("pm").get<long>(), c.at("mp").get<long>(),
                    c.at("mm").get<long>()};
    } catch (const Json::exception& e) {
      throw ParseError(std::string("malformed setting record: ") + e.what());
    }
    if (rec.i < 0 || rec.i > 3 || rec.j < 0 || rec.j > 3 || (rec.i == 0 && rec.j == 0))
      throw ParseError("setting indices must be in 0..3 and not (0,0)");
    if (rec.shots < 1) throw ParseError("setting must have at least one shot");
    long sum = 0;
    for (long c : rec.counts) {
      if (c < 0) throw ParseError("negative outcome count");
      sum += c;
    }
    if (sum != rec.shots) throw ParseError("outcome tallies must sum to the shot count");
    record.settings.push_back(rec);
  }
  return record;
}

inline Json to_json(const CriterionReport& c) {
  return {{"name", c.name},
          {"verdict", c.verdict == Verdict::entangled ? "entangled" : "not_detected"},
          {"statistic", c.statistic},
          {"threshold", c.threshold},
          {"margin", c.margin},
          {"boundary", c.boundary}};
}

inline Json to_json(const EntanglementSummary& s) {
  return {{"concurrence", s.concurrence},
          {"eof", s.eof},
          {"lower_bound", s.lower_bound},
          {"tau", s.tau}};
}

inline Json to_json(const AnalysisReport& report) {
  Json criteria = Json::array();
  for (const auto& c : report.criteria) criteria.push_back(to_json(c));
  return {{"state", report.state_descriptor},
          {"density", to_json(report.rho)},
          {"correlation_matrix", to_json(report.correlation)},
          {"criteria", criteria},
          {"entanglement", to_json(report.summary)},
          {"elapsed_ms", report.elapsed_ms}};
}

inline Json to_json(const StatVerdict& v) {
  return {{"name", v.name},
          {"statistic", v.statistic},
          {"threshold", v.threshold},
          {"sigma", v.sigma},
          {"z_margin", v.z_margin},
          {"z_required", v.z_required},
          {"verdict", std::string(decision_name(v.verdict))}};
}

// Human rendering of the analysis JSON; same data, no extra computation.
inline std::string report_table(const AnalysisReport& report) {
  std::string out;
  char line[160];
  out += "state: " + report.state_descriptor + "\n\n";
  out += "criterion               verdict        statistic    threshold       margin\n";
  for (const auto& c : report.criteria) {
    std::snprintf(line, sizeof line, "%-22s  %-12s  %11.6f  %11.6f  %11.6f%s\n", c.name.c_str(),
                  c.verdict == Verdict::entangled ? "entangled" : "not_detected", c.statistic,
                  c.threshold, c.margin, c.boundary ? "  [boundary]" : "");
    out += line;
  }
  const auto& s = report.summary;
  std::snprintf(line, sizeof line, "\nconcurrence %.6f  eof %.6f  lower_bound %.6f\n",
                s.concurrence, s.eof, s.lower_bound);
  out += line;
  std::snprintf(line, sizeof line, "tau: %.6f %.6f %.6f %.6f\n", s.tau[0], s.tau[1], s.tau[2],
                s.tau[3]);
  out += line;
  return out;
}

}  // namespace qent
