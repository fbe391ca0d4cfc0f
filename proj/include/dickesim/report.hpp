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

#pragma once

// Report assembly: pairs the closed-form engine with the dense oracle,
// collects any disagreement between them, and renders the result as JSON,
// CSV, or a human-readable table.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dickesim/dicke.hpp"
#include "dickesim/measurement.hpp"
#include "dickesim/quantifiers.hpp"
#include "dickesim/topology.hpp"

namespace dickesim {

enum class OutputFormat { kJson, kCsv, kTable };

/// Closed form and oracle must agree at least this well; anything worse is a
/// reportable discrepancy (and a nonzero exit for the CLI).
inline constexpr double kDiscrepancyTolerance = 1e-9;

/// Densest register the oracle cross-check is allowed to simulate. Chosen
/// well under Statevector::kMaxQubits so a full verification sweep stays
/// interactive.
inline constexpr int kOracleMaxQubits = 12;

/// One quantity on which the dense oracle contradicts the closed form.
struct Discrepancy {
  std::string field;
  std::string closed_form;
  std::string oracle;
  double delta = 0.0;
};

/// Quantities recomputed from dense amplitudes, independent of every closed
/// form they are checked against.
struct OracleBlock {
  double coherence = 0.0;
  SchmidtResult<double> schmidt_cut1;           ///< Cut (qubit 1 | rest).
  std::vector<MeasurementRecord> branches;      ///< branch_table on qubit 1.
  std::optional<TopologyClass> probe;           ///< Needs n >= 3.
};

/// Full analysis of one |D_n^(k)>.
struct AnalysisReport {
  DickeSpec spec;
  ClosedFormProfile profile;
  TopologyClass topology;
  FluidityReport fluid;
  std::optional<OracleBlock> oracle;
  std::vector<Discrepancy> discrepancies;  ///< Empty unless the oracle ran and disagreed.
};

/// Analyzes |D_n^(k)>. With the oracle enabled the spec must fit the dense
/// engine's verification cap kOracleMaxQubits.
AnalysisReport analyze_state(const DickeSpec& spec, bool with_oracle);

/// One (n, k) row of a family sweep.
struct SweepRow {
  DickeSpec spec;
  ClosedFormProfile profile;
  TopologyClass topology;
  std::vector<Discrepancy> discrepancies;
};

/// All rows with 1 <= n <= n_max, 0 <= k <= n, in lexicographic (n, k) order.
/// With `verify` set, rows within the oracle cap are cross-checked densely.
std::vector<SweepRow> sweep_rows(std::int64_t n_max, bool verify);

inline constexpr std::string_view kSweepCsvHeader =
    "n,k,dim,coherence,p0,p1,lambda1,lambda2,rank,class,density";

/// One measurement branch in a state comparison.
struct CompareBranch {
  int outcome = 0;
  double probability = 0.0;
  bool impossible = false;
  int residual_rank = 0;          ///< Schmidt rank of the survivors' first cut.
  double residual_coherence = 0.0;
};

/// One state in a side-by-side comparison.
struct CompareEntry {
  std::string label;
  std::optional<DickeSpec> dicke;  ///< Empty for GHZ, which is no Dicke state.
  double coherence = 0.0;
  int rank = 0;                    ///< Schmidt rank across (qubit 1 | rest).
  TopologyClass probed;
  /// Probe classification equals classify_dicke. Vacuously true for GHZ.
  bool matches_closed_form = true;
  std::vector<CompareBranch> branches;
};

/// GHZ vs W vs balanced Dicke at the same register size.
struct CompareReport {
  int n = 0;
  std::vector<CompareEntry> entries;
  bool all_agree = true;
};

/// Probes GHZ, |D_n^(1)> and |D_n^(n/2)> side by side. Requires
/// 3 <= n <= kOracleMaxQubits.
CompareReport compare_states(int n);

std::string render(const AnalysisReport& report, OutputFormat format);
std::string render(const std::vector<SweepRow>& rows, OutputFormat format);
std::string render(const CompareReport& report, OutputFormat format);

}  // namespace dickesim
