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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qent/io.hpp"
#include "qent/qent.hpp"

namespace {

constexpr int kExitEntangled = 0;
constexpr int kExitNotDetected = 1;
constexpr int kExitInputError = 2;
constexpr int kExitStudyViolation = 3;

double boundary_tolerance() {
  const char* env = std::getenv("QENT_TOLERANCE");
  if (env == nullptr || *env == '\0') return qent::kTol.boundary;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v >= 0.0))
    throw qent::ParseError("QENT_TOLERANCE must be a nonnegative number");
  return v;
}

qent::Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qent::ParseError("cannot open " + path);
  qent::Json j;
  try {
    in >> j;
  } catch (const qent::Json::exception& e) {
    throw qent::ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

int run_analyze(const std::string& file, const std::string& format) {
  const auto input = qent::state_from_json(load_json_file(file));
  const auto report = qent::analyze(input.rho, input.descriptor, boundary_tolerance());
  if (format == "table") {
    std::cout << qent::report_table(report);
  } else {
    std::cout << qent::to_json(report).dump(2) << "\n";
  }
  return qent::any_entangled(report) ? kExitEntangled : kExitNotDetected;
}

struct SimulateArgs {
  std::string file;
  std::string strategy = "full9";
  std::optional<long> shots;
  std::optional<std::uint64_t> seed;
  int bootstrap = 1000;
  double z_required = 3.0;
  std::string format = "json";
};

qent::Strategy parse_strategy(const std::string& name) {
  if (name == "full9") return qent::Strategy::full9;
  if (name == "schmidt3") return qent::Strategy::schmidt3;
  if (name == "schmidt2") return qent::Strategy::schmidt2;
  if (name == "pure3" || name == "pure3_local") return qent::Strategy::pure3_local;
  throw qent::ParseError("unknown strategy \"" + name + "\"");
}

int run_simulate(const SimulateArgs& args) {
  const auto json = load_json_file(args.file);
  const auto strategy = parse_strategy(args.strategy);

  qent::MeasurementRecord record;
  std::string descriptor;
  long shots_per_setting = 0;
  if (qent::looks_like_record(json)) {
    // Pre-measured tallies: analyze them directly, no sampling.
    record = qent::record_from_json(json);
    descriptor = "record:" + args.file;
    if (!record.settings.empty()) shots_per_setting = record.settings.front().shots;
  } else {
    if (!args.shots.has_value())
      throw qent::ParseError("--shots is required when simulating a state input");
    if (!args.seed.has_value())
      throw qent::ParseError("--seed is required when simulating a state input");
    const auto input = qent::state_from_json(json);
    descriptor = input.descriptor;
    shots_per_setting = *args.shots;
    const auto plan = qent::make_plan(strategy, shots_per_setting);
    record = qent::run_plan(input.rho, plan, *args.seed);
  }

  const auto plan = qent::make_plan(strategy, std::max(shots_per_setting, 1L));
  qent::StatVerdict verdict;
  switch (strategy) {
    case qent::Strategy::full9:
      verdict = qent::estimate_trace_norm(record, args.bootstrap, args.z_required);
      break;
    case qent::Strategy::schmidt3:
    case qent::Strategy::schmidt2:
      verdict =
          qent::estimate_schmidt_family(record, strategy, args.bootstrap, args.z_required);
      break;
    case qent::Strategy::pure3_local: {
      const auto est = qent::estimate_pure_concurrence(record, args.bootstrap);
      verdict.name = "pure_concurrence";
      verdict.statistic = est.value;
      verdict.threshold = 0.0;
      verdict.sigma = est.sigma;
      verdict.z_required = args.z_required;
      verdict.z_margin = qent::detail::z_score(est.value, 0.0, est.sigma);
      verdict.verdict = qent::detail::decide(verdict.z_margin, args.z_required);
      break;
    }
  }

  qent::Json out = {{"state", descriptor},
                    {"strategy", std::string(qent::strategy_name(strategy))},
                    {"shots_per_setting", shots_per_setting},
                    {"total_shots", qent::total_shots(record)},
                    {"f_cost", qent::cost_accounting(plan)},
                    {"verdict", qent::to_json(verdict)},
                    {"record", qent::to_json(record)}};
  if (args.format == "table") {
    std::printf("state:     %s\n", descriptor.c_str());
    std::printf("strategy:  %s  (f = %ld, tomography baseline %ld)\n",
                std::string(qent::strategy_name(strategy)).c_str(), qent::cost_accounting(plan),
                qent::kTomographyCost);
    std::printf("shots:     %ld total\n", qent::total_shots(record));
    std::printf("statistic: %.6f +/- %.6f (threshold %.3f)\n", verdict.statistic, verdict.sigma,
                verdict.threshold);
    std::printf("z_margin:  %.3f (required %.1f)\n", verdict.z_margin, verdict.z_required);
    std::printf("verdict:   %s\n", std::string(qent::decision_name(verdict.verdict)).c_str());
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return verdict.verdict == qent::StatDecision::entangled ? kExitEntangled : kExitNotDetected;
}

int run_study(const std::string& ensemble_name, std::size_t count, std::uint64_t seed,
              const std::string& out_path) {
  qent::Ensemble ensemble;
  if (ensemble_name == "pure") {
    ensemble = qent::Ensemble::pure;
  } else if (ensemble_name == "mixed") {
    ensemble = qent::Ensemble::mixed;
  } else if (ensemble_name == "werner") {
    ensemble = qent::Ensemble::werner;
  } else {
    throw qent::ParseError("unknown ensemble \"" + ensemble_name + "\"");
  }

  const auto result = qent::run_study(ensemble, count, seed, boundary_tolerance());
  std::ofstream out(out_path);
  if (!out) throw qent::ParseError("cannot write " + out_path);
  out << qent::study_csv(result);
  out.close();

  std::fprintf(stderr, "wrote %zu rows to %s\n", result.rows.size(), out_path.c_str());
  if (result.inclusion_violations != 0) {
    std::fprintf(stderr, "ERROR: %zu rows violate the CHSH => trace-norm inclusion\n",
                 result.inclusion_violations);
    return kExitStudyViolation;
  }
  return kExitEntangled;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement detection: correlation-matrix criteria, "
               "Bell tests, and finite-shot measurement simulation"};
  app.require_subcommand(1);

  std::string analyze_file, analyze_format = "json";
  auto* analyze = app.add_subcommand("analyze", "Exact criteria and measures for a state file");
  analyze->add_option("file", analyze_file, "state JSON file")->required();
  analyze->add_option("--format", analyze_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  SimulateArgs sim;
  long sim_shots = 0;
  std::uint64_t sim_seed = 0;
  auto* simulate =
      app.add_subcommand("simulate", "Finite-shot measurement simulation and estimation");
  simulate->add_option("file", sim.file, "state or measurement-record JSON file")->required();
  simulate->add_option("--strategy", sim.strategy, "full9, schmidt3, schmidt2 or pure3")
      ->required();
  auto* shots_opt = simulate->add_option("--shots", sim_shots, "shots per setting");
  auto* seed_opt = simulate->add_option("--seed", sim_seed, "RNG seed");
  simulate->add_option("--bootstrap", sim.bootstrap, "bootstrap replicates (default 1000)");
  simulate->add_option("--z", sim.z_required, "z threshold for verdicts (default 3)");
  simulate->add_option("--format", sim.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string study_ensemble, study_out;
  std::size_t study_count = 0;
  std::uint64_t study_seed = 0;
  auto* study = app.add_subcommand("study", "Detection-rate table over a state ensemble");
  study->add_option("--ensemble", study_ensemble, "pure, mixed or werner")->required();
  study->add_option("--count", study_count, "number of states")->required();
  study->add_option("--seed", study_seed, "RNG seed (werner grid ignores it)");
  study->add_option("--out", study_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) return run_analyze(analyze_file, analyze_format);
    if (*simulate) {
      if (shots_opt->count() > 0) sim.shots = sim_shots;
      if (seed_opt->count() > 0) sim.seed = sim_seed;
      return run_simulate(sim);
    }
    if (*study) return run_study(study_ensemble, study_count, study_seed, study_out);
  } catch (const qent::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
