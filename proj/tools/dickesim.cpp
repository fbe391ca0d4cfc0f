// Copyright 2026 the dickesim authors
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

// dickesim - command-line front end.
//
// Subcommands:
//   analyze <n> <k>       closed-form profile of |D_n^(k)>, optionally with a
//                         dense-oracle cross-check
//   cascade <n> <k>       sample a seeded measurement cascade
//   sweep <n_max>         one row per (n, k) family up to n_max
//   compare <n>           GHZ vs W vs balanced Dicke side by side
//
// Exit codes: 0 success and no discrepancies, 1 discrepancies found,
// 2 usage error, 3 oracle requested beyond its cap.

#include <cerrno>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dickesim/format.hpp"
#include "dickesim/measurement.hpp"
#include "dickesim/report.hpp"

namespace {

using dickesim::OutputFormat;

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracleCap = 3;

OutputFormat parse_format(const std::string& name, OutputFormat fallback) {
  if (name.empty()) return fallback;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return OutputFormat::kTable;
}

std::uint64_t seed_from_environment() {
  const char* text = std::getenv("DICKESIM_SEED");
  if (text == nullptr || *text == '\0') return 0;
  if (*text == '-') {
    throw std::invalid_argument("DICKESIM_SEED must be a non-negative integer");
  }
  errno = 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (errno != 0 || end == text || *end != '\0') {
    throw std::invalid_argument("DICKESIM_SEED must be a decimal unsigned integer");
  }
  return value;
}

int run_analyze(const dickesim::DickeSpec& spec, bool oracle, bool verify,
                OutputFormat format) {
  const bool cross_check = oracle || verify;
  if (oracle && spec.n > dickesim::kOracleMaxQubits) {
    std::cerr << "error: oracle cross-check capped at " << dickesim::kOracleMaxQubits
              << " qubits\n";
    return kExitOracleCap;
  }
  const bool can_check = spec.n <= dickesim::kOracleMaxQubits;
  if (cross_check && !can_check) {
    std::cerr << "note: verification skipped, register exceeds the oracle cap\n";
  }
  auto report = dickesim::analyze_state(spec, cross_check && can_check);
  if (!oracle) report.oracle.reset();  // --verify alone checks silently
  std::cout << dickesim::render(report, format);
  return report.discrepancies.empty() ? kExitOk : kExitDiscrepancy;
}

int run_cascade(const dickesim::DickeSpec& spec, std::optional<int> steps,
                std::uint64_t seed, OutputFormat format) {
  dickesim::validate_spec(spec);  // bounds n before it is narrowed for the default
  const int step_count = steps.value_or(static_cast<int>(spec.n));
  const auto trace = dickesim::sample_cascade(spec, step_count, seed);
  switch (format) {
    case OutputFormat::kJson:
      std::cout << dickesim::cascade_to_json(trace);
      break;
    case OutputFormat::kCsv: {
      std::cout << "step,qubit,outcome,probability,residual_n,residual_k\n";
      for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const auto& rec = trace.records[i];
        std::cout << (i + 1) << ',' << rec.qubit << ',' << rec.outcome << ','
                  << dickesim::decimal17(rec.probability) << ','
                  << rec.residual_spec->n << ',' << rec.residual_spec->k << "\n";
      }
      break;
    }
    case OutputFormat::kTable: {
      std::cout << "cascade on Dicke (" << trace.initial.n << ", " << trace.initial.k
                << ")  seed " << trace.seed << "\n";
      for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const auto& rec = trace.records[i];
        std::cout << "  step " << (i + 1) << ": outcome " << rec.outcome << "  (p = "
                  << dickesim::decimal17(rec.probability) << ")  residual ("
                  << rec.residual_spec->n << ", " << rec.residual_spec->k << ")\n";
      }
      std::cout << "  final (" << trace.final_spec.n << ", " << trace.final_spec.k
                << ")\n";
      break;
    }
  }
  return kExitOk;
}

int run_sweep(std::int64_t n_max, bool verify, OutputFormat format) {
  const auto rows = dickesim::sweep_rows(n_max, verify);
  std::cout << dickesim::render(rows, format);
  for (const auto& row : rows) {
    if (!row.discrepancies.empty()) return kExitDiscrepancy;
  }
  return kExitOk;
}

int run_compare(int n, OutputFormat format) {
  const auto report = dickesim::compare_states(n);
  std::cout << dickesim::render(report, format);
  return report.all_agree ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulation and closed-form analysis of symmetric Dicke states"};
  app.require_subcommand(1);

  std::string format_name;
  app.add_option("--format", format_name, "Output format: json, csv, or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  std::uint64_t seed = 0;
  auto* seed_option =
      app.add_option("--seed", seed, "Cascade RNG seed (default: DICKESIM_SEED, else 0)");
  bool verify = false;
  app.add_flag("--verify", verify,
               "Cross-check closed forms against the dense engine; discrepancies fail "
               "the exit code");
  bool oracle = false;
  app.add_flag("--oracle", oracle, "Attach dense-oracle quantities to the report");

  dickesim::DickeSpec analyze_spec;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one Dicke state");
  analyze_cmd->add_option("n", analyze_spec.n, "Qubit count")->required();
  analyze_cmd->add_option("k", analyze_spec.k, "Excitation count")->required();
  analyze_cmd->fallthrough();

  dickesim::DickeSpec cascade_spec;
  int cascade_steps = -1;
  auto* cascade_cmd =
      app.add_subcommand("cascade", "Sample a seeded measurement cascade");
  cascade_cmd->add_option("n", cascade_spec.n, "Qubit count")->required();
  cascade_cmd->add_option("k", cascade_spec.k, "Excitation count")->required();
  cascade_cmd
      ->add_option("--steps", cascade_steps,
                   "Measurements to perform (default: the whole register)")
      ->check(CLI::NonNegativeNumber);
  cascade_cmd->fallthrough();

  std::int64_t sweep_max = 0;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Profile every (n, k) family up to n_max");
  sweep_cmd->add_option("n_max", sweep_max, "Largest qubit count")->required();
  sweep_cmd->fallthrough();

  int compare_n = 0;
  auto* compare_cmd =
      app.add_subcommand("compare", "GHZ vs W vs balanced Dicke at one size");
  compare_cmd->add_option("n", compare_n, "Qubit count")->required();
  compare_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seed_option->count() == 0) seed = seed_from_environment();

    if (*analyze_cmd) {
      return run_analyze(analyze_spec, oracle, verify,
                         parse_format(format_name, OutputFormat::kTable));
    }
    if (*cascade_cmd) {
      std::optional<int> steps;
      if (cascade_steps >= 0) steps = cascade_steps;
      return run_cascade(cascade_spec, steps, seed,
                         parse_format(format_name, OutputFormat::kJson));
    }
    if (*sweep_cmd) {
      return run_sweep(sweep_max, verify, parse_format(format_name, OutputFormat::kCsv));
    }
    return run_compare(compare_n, parse_format(format_name, OutputFormat::kTable));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
