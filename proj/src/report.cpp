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

#include "dickesim/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "dickesim/format.hpp"

namespace dickesim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::array<double, 2> sorted_desc(std::array<double, 2> coeffs) {
  if (coeffs[0] < coeffs[1]) std::swap(coeffs[0], coeffs[1]);
  return coeffs;
}

void check_close(std::vector<Discrepancy>& out, std::string field,
                 std::string closed_text, double closed_value, double oracle_value) {
  const double delta = std::abs(closed_value - oracle_value);
  if (delta > kDiscrepancyTolerance) {
    out.push_back(Discrepancy{std::move(field), std::move(closed_text),
                              decimal17(oracle_value), delta});
  }
}

void check_equal(std::vector<Discrepancy>& out, std::string field,
                 std::string closed_text, std::string oracle_text) {
  if (closed_text != oracle_text) {
    out.push_back(
        Discrepancy{std::move(field), std::move(closed_text), std::move(oracle_text), 1.0});
  }
}

OracleBlock run_oracle(const DickeSpec& spec) {
  OracleBlock oracle;
  const auto state = dicke_state(spec);
  oracle.coherence = l1_coherence(state);
  if (spec.n >= 2) oracle.schmidt_cut1 = schmidt(state, 1);
  oracle.branches = branch_table(state, 1);
  if (spec.n >= 3) oracle.probe = classify_by_probe(state);
  return oracle;
}

std::vector<Discrepancy> oracle_discrepancies(const DickeSpec& spec,
                                              const ClosedFormProfile& profile,
                                              const TopologyClass& topology,
                                              const OracleBlock& oracle) {
  std::vector<Discrepancy> out;
  check_close(out, "coherence", profile.coherence.str(), profile.coherence.as_double(),
              oracle.coherence);
  check_close(out, "p0", profile.p0.str(), profile.p0.value(),
              oracle.branches[0].probability);
  check_close(out, "p1", profile.p1.str(), profile.p1.value(),
              oracle.branches[1].probability);
  if (spec.n >= 2) {
    // Compare spectra largest-first; the measured list drops coefficients
    // under tolerance, which the closed form represents as exact zeros.
    const auto closed = sorted_desc(profile.schmidt_coeffs);
    const auto& measured = oracle.schmidt_cut1.coefficients;
    for (int i = 0; i < 2; ++i) {
      const double measured_i =
          i < static_cast<int>(measured.size()) ? measured[i] : 0.0;
      check_close(out, i == 0 ? "lambda1" : "lambda2", decimal17(closed[i]), closed[i],
                  measured_i);
    }
    if (profile.schmidt_rank != oracle.schmidt_cut1.rank) {
      out.push_back(Discrepancy{
          "rank", std::to_string(profile.schmidt_rank),
          std::to_string(oracle.schmidt_cut1.rank),
          std::abs(static_cast<double>(profile.schmidt_rank - oracle.schmidt_cut1.rank))});
    }
  }
  if (oracle.probe) {
    check_equal(out, "class", std::string(to_string(topology.link)),
                std::string(to_string(oracle.probe->link)));
    check_equal(out, "density", std::string(to_string(topology.density)),
                std::string(to_string(oracle.probe->density)));
  }
  return out;
}

ordered_json spec_json(const DickeSpec& spec) {
  return ordered_json{{"n", spec.n}, {"k", spec.k}};
}

ordered_json topology_json(const TopologyClass& topology) {
  return ordered_json{{"class", std::string(to_string(topology.link))},
                      {"density", std::string(to_string(topology.density))}};
}

ordered_json discrepancies_json(const std::vector<Discrepancy>& discrepancies) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : discrepancies) {
    arr.push_back({{"field", d.field},
                   {"closed_form", d.closed_form},
                   {"oracle", d.oracle},
                   {"delta", d.delta}});
  }
  return arr;
}

ordered_json closed_form_json(const ClosedFormProfile& profile) {
  return ordered_json{
      {"dim", profile.dim.str()},
      {"coherence", profile.coherence.str()},
      {"p0",
       {{"rational", profile.p0.str()}, {"decimal", decimal17(profile.p0.value())}}},
      {"p1",
       {{"rational", profile.p1.str()}, {"decimal", decimal17(profile.p1.value())}}},
      {"lambda1", decimal17(profile.schmidt_coeffs[0])},
      {"lambda2", decimal17(profile.schmidt_coeffs[1])},
      {"schmidt_rank", profile.schmidt_rank},
  };
}

ordered_json oracle_json(const OracleBlock& oracle, std::int64_t n) {
  ordered_json coeffs = ordered_json::array();
  for (double c : oracle.schmidt_cut1.coefficients) coeffs.push_back(decimal17(c));
  ordered_json branches = ordered_json::array();
  for (const auto& rec : oracle.branches) {
    ordered_json branch{{"qubit", rec.qubit},
                        {"outcome", rec.outcome},
                        {"probability", decimal17(rec.probability)},
                        {"impossible", rec.impossible},
                        {"residual_is_dicke", rec.residual_is_dicke}};
    branch["residual"] =
        rec.residual_spec ? spec_json(*rec.residual_spec) : ordered_json(nullptr);
    branches.push_back(std::move(branch));
  }
  ordered_json j{{"coherence", decimal17(oracle.coherence)}};
  if (n >= 2) {
    j["schmidt"] = ordered_json{{"coefficients", coeffs},
                                {"rank", oracle.schmidt_cut1.rank},
                                {"tolerance", oracle.schmidt_cut1.tolerance_used},
                                {"is_maximal", oracle.schmidt_cut1.is_maximal}};
  }
  j["branches"] = std::move(branches);
  if (oracle.probe) j["probe"] = topology_json(*oracle.probe);
  return j;
}

std::string csv_row(const DickeSpec& spec, const ClosedFormProfile& profile,
                    const TopologyClass& topology) {
  std::ostringstream os;
  os << spec.n << ',' << spec.k << ',' << profile.dim.str() << ','
     << profile.coherence.str() << ',' << decimal17(profile.p0.value()) << ','
     << decimal17(profile.p1.value()) << ',' << decimal17(profile.schmidt_coeffs[0])
     << ',' << decimal17(profile.schmidt_coeffs[1]) << ',' << profile.schmidt_rank << ','
     << to_string(topology.link) << ',' << to_string(topology.density);
  return os.str();
}

std::string analysis_table(const AnalysisReport& report) {
  std::ostringstream os;
  os << "Dicke state  n = " << report.spec.n << "  k = " << report.spec.k << "\n";
  os << "  dimension          " << report.profile.dim.str() << "\n";
  os << "  coherence          " << report.profile.coherence.str() << "\n";
  os << "  p(0), p(1)         " << report.profile.p0.str() << ", "
     << report.profile.p1.str() << "\n";
  os << "  schmidt coeffs     " << decimal17(report.profile.schmidt_coeffs[0]) << ", "
     << decimal17(report.profile.schmidt_coeffs[1]) << "  (rank "
     << report.profile.schmidt_rank << ")\n";
  os << "  link class         " << to_string(report.topology.link) << "\n";
  os << "  link density       " << to_string(report.topology.density) << "\n";
  os << "  fluidity           " << report.fluid.fluidity.str() << "  ("
     << to_string(report.fluid.regime) << ")\n";
  if (!report.fluid.residual_fluidities.empty()) {
    os << "  residual fluidity  ";
    bool first = true;
    for (const auto& [outcome, value] : report.fluid.residual_fluidities) {
      if (!first) os << "   ";
      os << "outcome " << outcome << ": " << value.str();
      first = false;
    }
    os << "\n";
  }
  if (report.oracle) {
    const auto& oracle = *report.oracle;
    os << "oracle (dense, " << report.spec.n << " qubits)\n";
    os << "  coherence          " << decimal17(oracle.coherence) << "\n";
    if (report.spec.n >= 2) {
      os << "  schmidt coeffs     ";
      for (std::size_t i = 0; i < oracle.schmidt_cut1.coefficients.size(); ++i) {
        if (i > 0) os << ", ";
        os << decimal17(oracle.schmidt_cut1.coefficients[i]);
      }
      os << "  (rank " << oracle.schmidt_cut1.rank << ", maximal: "
         << (oracle.schmidt_cut1.is_maximal ? "yes" : "no") << ")\n";
    }
    for (const auto& rec : oracle.branches) {
      os << "  branch " << rec.outcome << "            p = "
         << decimal17(rec.probability);
      if (rec.impossible) {
        os << "  (impossible)";
      } else if (rec.residual_spec) {
        os << "  residual Dicke (" << rec.residual_spec->n << ", "
           << rec.residual_spec->k << ")";
      }
      os << "\n";
    }
    if (oracle.probe) {
      os << "  probe class        " << to_string(oracle.probe->link) << " / "
         << to_string(oracle.probe->density) << "\n";
    }
  }
  if (report.discrepancies.empty()) {
    os << "discrepancies: none\n";
  } else {
    os << "discrepancies:\n";
    for (const auto& d : report.discrepancies) {
      os << "  " << d.field << ": closed form " << d.closed_form << " vs oracle "
         << d.oracle << " (delta " << d.delta << ")\n";
    }
  }
  return os.str();
}

}  // namespace

AnalysisReport analyze_state(const DickeSpec& spec, bool with_oracle) {
  AnalysisReport report;
  report.spec = spec;
  report.profile = closed_form_profile(spec);
  report.topology = classify_dicke(spec);
  report.fluid = fluidity(spec);
  if (with_oracle) {
    if (spec.n > kOracleMaxQubits) {
      throw std::invalid_argument("oracle cross-check capped at 12 qubits");
    }
    report.oracle = run_oracle(spec);
    report.discrepancies =
        oracle_discrepancies(spec, report.profile, report.topology, *report.oracle);
  }
  return report;
}

std::vector<SweepRow> sweep_rows(std::int64_t n_max, bool verify) {
  if (n_max < 1) throw std::invalid_argument("sweep needs n_max >= 1");
  if (n_max > kMaxClosedFormQubits) {
    throw std::invalid_argument("qubit count exceeds closed-form engine limit");
  }
  std::vector<SweepRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      SweepRow row;
      row.spec = DickeSpec{n, k};
      row.profile = closed_form_profile(row.spec);
      row.topology = classify_dicke(row.spec);
      if (verify && n <= kOracleMaxQubits) {
        const OracleBlock oracle = run_oracle(row.spec);
        row.discrepancies =
            oracle_discrepancies(row.spec, row.profile, row.topology, oracle);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

CompareEntry probe_entry(std::string label, std::optional<DickeSpec> dicke,
                         const Statevector<double>& state) {
  CompareEntry entry;
  entry.label = std::move(label);
  entry.dicke = dicke;
  entry.coherence = l1_coherence(state);
  entry.rank = schmidt(state, 1).rank;
  entry.probed = classify_by_probe(state);
  if (dicke) entry.matches_closed_form = entry.probed == classify_dicke(*dicke);
  for (int outcome = 0; outcome <= 1; ++outcome) {
    CompareBranch branch;
    branch.outcome = outcome;
    branch.probability = outcome_probability(state, 1, outcome);
    if (branch.probability < kZeroProbabilityThreshold) {
      branch.impossible = true;
    } else {
      const auto projected = project(state, 1, outcome);
      branch.residual_rank = schmidt(*projected.post, 1).rank;
      branch.residual_coherence = l1_coherence(*projected.post);
    }
    entry.branches.push_back(branch);
  }
  return entry;
}

}  // namespace

CompareReport compare_states(int n) {
  if (n < 3) throw std::invalid_argument("comparison needs at least 3 qubits");
  if (n > kOracleMaxQubits) {
    throw std::invalid_argument("comparison capped at 12 qubits");
  }
  CompareReport report;
  report.n = n;
  report.entries.push_back(probe_entry("GHZ", std::nullopt, ghz_state(n)));
  const DickeSpec w{n, 1};
  report.entries.push_back(probe_entry("W", w, dicke_state(w)));
  const DickeSpec balanced{n, n / 2};
  report.entries.push_back(probe_entry("balanced", balanced, dicke_state(balanced)));
  for (const auto& entry : report.entries) {
    report.all_agree = report.all_agree && entry.matches_closed_form;
  }
  return report;
}

std::string render(const AnalysisReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      ordered_json j;
      j["spec"] = spec_json(report.spec);
      j["closed_form"] = closed_form_json(report.profile);
      j["topology"] = topology_json(report.topology);
      ordered_json residuals = ordered_json::object();
      for (const auto& [outcome, value] : report.fluid.residual_fluidities) {
        residuals[std::to_string(outcome)] = value.str();
      }
      j["fluidity"] = ordered_json{
          {"value", report.fluid.fluidity.str()},
          {"regime", std::string(to_string(report.fluid.regime))},
          {"residuals", std::move(residuals)}};
      if (report.oracle) j["oracle"] = oracle_json(*report.oracle, report.spec.n);
      j["discrepancies"] = discrepancies_json(report.discrepancies);
      return j.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::ostringstream os;
      os << kSweepCsvHeader << "\n"
         << csv_row(report.spec, report.profile, report.topology) << "\n";
      return os.str();
    }
    case OutputFormat::kTable:
      return analysis_table(report);
  }
  throw std::logic_error("unhandled output format");
}

std::string render(const std::vector<SweepRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json j;
        j["spec"] = spec_json(row.spec);
        j["closed_form"] = closed_form_json(row.profile);
        j["topology"] = topology_json(row.topology);
        j["discrepancies"] = discrepancies_json(row.discrepancies);
        arr.push_back(std::move(j));
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::ostringstream os;
      os << kSweepCsvHeader << "\n";
      for (const auto& row : rows) {
        os << csv_row(row.spec, row.profile, row.topology) << "\n";
      }
      return os.str();
    }
    case OutputFormat::kTable: {
      std::ostringstream os;
      os << std::left << std::setw(5) << "n" << std::setw(5) << "k" << std::setw(14)
         << "dim" << std::setw(16) << "coherence" << std::setw(6) << "rank"
         << std::setw(19) << "class" << "density\n";
      for (const auto& row : rows) {
        os << std::left << std::setw(5) << row.spec.n << std::setw(5) << row.spec.k
           << std::setw(14) << row.profile.dim.str() << std::setw(16)
           << row.profile.coherence.str() << std::setw(6) << row.profile.schmidt_rank
           << std::setw(19) << to_string(row.topology.link)
           << to_string(row.topology.density) << "\n";
      }
      return os.str();
    }
  }
  throw std::logic_error("unhandled output format");
}

std::string render(const CompareReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      ordered_json j;
      j["n"] = report.n;
      ordered_json entries = ordered_json::array();
      for (const auto& entry : report.entries) {
        ordered_json e;
        e["label"] = entry.label;
        e["spec"] = entry.dicke ? spec_json(*entry.dicke) : ordered_json(nullptr);
        e["coherence"] = decimal17(entry.coherence);
        e["rank"] = entry.rank;
        e["probe"] = topology_json(entry.probed);
        e["matches_closed_form"] = entry.matches_closed_form;
        ordered_json branches = ordered_json::array();
        for (const auto& branch : entry.branches) {
          branches.push_back({{"outcome", branch.outcome},
                              {"probability", decimal17(branch.probability)},
                              {"impossible", branch.impossible},
                              {"residual_rank", branch.residual_rank},
                              {"residual_coherence", decimal17(branch.residual_coherence)}});
        }
        e["branches"] = std::move(branches);
        entries.push_back(std::move(e));
      }
      j["entries"] = std::move(entries);
      j["all_agree"] = report.all_agree;
      return j.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::ostringstream os;
      os << "label,coherence,rank,class,density,matches_closed_form,"
            "p0,residual_rank0,residual_coherence0,p1,residual_rank1,residual_coherence1\n";
      for (const auto& entry : report.entries) {
        os << entry.label << ',' << decimal17(entry.coherence) << ',' << entry.rank
           << ',' << to_string(entry.probed.link) << ','
           << to_string(entry.probed.density) << ','
           << (entry.matches_closed_form ? "yes" : "no");
        for (const auto& branch : entry.branches) {
          os << ',' << decimal17(branch.probability) << ',' << branch.residual_rank
             << ',' << decimal17(branch.residual_coherence);
        }
        os << "\n";
      }
      return os.str();
    }
    case OutputFormat::kTable: {
      std::ostringstream os;
      os << "comparison at n = " << report.n << "\n";
      os << std::left << std::setw(10) << "state" << std::setw(22) << "coherence"
         << std::setw(6) << "rank" << std::setw(20) << "class" << std::setw(14)
         << "density" << "branches (outcome: p, residual rank, residual coherence)\n";
      for (const auto& entry : report.entries) {
        os << std::left << std::setw(10) << entry.label << std::setw(22)
           << decimal17(entry.coherence) << std::setw(6) << entry.rank << std::setw(20)
           << to_string(entry.probed.link) << std::setw(14)
           << to_string(entry.probed.density);
        bool first = true;
        for (const auto& branch : entry.branches) {
          if (!first) os << "   ";
          os << branch.outcome << ": ";
          if (branch.impossible) {
            os << "impossible";
          } else {
            os << decimal17(branch.probability) << ", " << branch.residual_rank << ", "
               << decimal17(branch.residual_coherence);
          }
          first = false;
        }
        os << "\n";
      }
      os << "closed-form agreement: " << (report.all_agree ? "yes" : "no") << "\n";
      return os.str();
    }
  }
  throw std::logic_error("unhandled output format");
}

}  // namespace dickesim
