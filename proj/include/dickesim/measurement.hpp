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

// Projective single-qubit measurements and measurement cascades. Dense states
// are projected amplitude by amplitude; cascades on Dicke states never touch
// amplitudes at all, because each residual is again a Dicke state with a
// closed-form branch distribution.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dickesim/dicke.hpp"
#include "dickesim/rng.hpp"
#include "dickesim/statevector.hpp"

namespace dickesim {

/// Born probabilities below this mark an impossible outcome rather than a
/// tiny amplitude: every legitimate branch probability handled here is a
/// rational with denominator at most the qubit count.
inline constexpr double kZeroProbabilityThreshold = 1e-14;

/// One measured qubit: which, what came out, how likely, and what was left.
struct MeasurementRecord {
  int qubit = 1;    ///< 1-based position in the register measured.
  int outcome = 0;  ///< 0 or 1.
  double probability = 0.0;
  std::int64_t residual_n = 0;  ///< Qubits remaining: one fewer than measured.
  /// Outcome has Born probability below kZeroProbabilityThreshold; no
  /// residual state exists on this branch.
  bool impossible = false;
  /// The residual was recognized as (or is by construction) a Dicke state.
  bool residual_is_dicke = false;
  /// Set when residual_is_dicke; the empty register is {0, 0}.
  std::optional<DickeSpec> residual_spec;
};

/// Outcome of projecting one qubit of a dense state.
template <class Real = double>
struct ProjectionResult {
  Real probability = 0;
  /// Renormalized post-measurement state of the remaining qubits. Empty when
  /// the measured register had a single qubit: the outcome absorbs it whole.
  std::optional<Statevector<Real>> post;
};

/// Born probability of measuring `outcome` on `qubit`.
template <class Real>
Real outcome_probability(const Statevector<Real>& state, int qubit, int outcome) {
  const int n = state.n_qubits();
  if (qubit < 1 || qubit > n) throw std::out_of_range("bad qubit");
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");
  const int shift = n - qubit;
  Real p = 0;
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    if (((static_cast<std::uint64_t>(i) >> shift) & 1u) == static_cast<unsigned>(outcome)) {
      p += std::norm(state[i]);
    }
  }
  return p;
}

/// Projective measurement of `outcome` on `qubit`, tracing the measured qubit
/// out of the register. Throws std::domain_error when the outcome's Born
/// probability is below kZeroProbabilityThreshold.
template <class Real>
ProjectionResult<Real> project(const Statevector<Real>& state, int qubit, int outcome) {
  const int n = state.n_qubits();
  if (qubit < 1 || qubit > n) throw std::out_of_range("bad qubit");
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");

  const Real p = outcome_probability(state, qubit, outcome);
  if (p < Real(kZeroProbabilityThreshold)) {
    throw std::domain_error("impossible outcome: branch probability is zero");
  }

  ProjectionResult<Real> result;
  result.probability = p;
  if (n == 1) return result;  // nothing remains to renormalize

  const int shift = n - qubit;
  const std::uint64_t low_mask = (std::uint64_t{1} << shift) - 1;
  typename Statevector<Real>::VectorC post(state.dim() / 2);
  for (Eigen::Index j = 0; j < post.size(); ++j) {
    const std::uint64_t rest = static_cast<std::uint64_t>(j);
    const std::uint64_t i = ((rest >> shift) << (shift + 1)) |
                            (static_cast<std::uint64_t>(outcome) << shift) |
                            (rest & low_mask);
    post(j) = state[static_cast<Eigen::Index>(i)];
  }
  // The constructor renormalizes, which divides out exactly sqrt(p).
  result.post.emplace(n - 1, std::move(post));
  return result;
}

/// Both branches of measuring `qubit`: outcome 0 first, then outcome 1.
/// Impossible branches are flagged rather than thrown; possible residuals are
/// checked against the Dicke family.
template <class Real>
std::vector<MeasurementRecord> branch_table(const Statevector<Real>& state, int qubit) {
  const int n = state.n_qubits();
  if (qubit < 1 || qubit > n) throw std::out_of_range("bad qubit");

  std::vector<MeasurementRecord> records;
  records.reserve(2);
  for (int outcome = 0; outcome <= 1; ++outcome) {
    MeasurementRecord rec;
    rec.qubit = qubit;
    rec.outcome = outcome;
    rec.residual_n = n - 1;
    rec.probability = static_cast<double>(outcome_probability(state, qubit, outcome));
    if (rec.probability < kZeroProbabilityThreshold) {
      rec.impossible = true;
    } else if (n == 1) {
      rec.residual_is_dicke = true;  // the empty register, vacuously Dicke
      rec.residual_spec = DickeSpec{0, 0};
    } else {
      const auto post = project(state, qubit, outcome).post;
      if (const auto spec = recognize_dicke(*post)) {
        rec.residual_is_dicke = true;
        rec.residual_spec = *spec;
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

/// Full record of one sampled measurement cascade on a Dicke state.
struct CascadeTrace {
  DickeSpec initial;
  std::uint64_t seed = 0;
  /// One record per step; record i measured qubit 1 of the then-current
  /// register, so every qubit field is 1.
  std::vector<MeasurementRecord> records;
  DickeSpec final_spec;
};

/// Samples `steps` successive single-qubit measurements starting from
/// |D_n^(k)>, using closed-form branch probabilities and one SplitMix64
/// stream seeded with `seed`. By symmetry each step measures qubit 1 of the
/// current register. Deterministic: (spec, steps, seed) fixes the trace.
CascadeTrace sample_cascade(const DickeSpec& spec, int steps, std::uint64_t seed);

/// Canonical JSON rendering of a trace. Probabilities are decimal strings
/// with 17 significant digits, so re-parsing reproduces the exact doubles and
/// equal traces serialize to identical bytes.
std::string cascade_to_json(const CascadeTrace& trace);

/// One root-to-leaf path through the full measurement outcome tree.
struct TreePath {
  std::string outcomes;  ///< '0'/'1' per step, first measurement first.
  double probability = 0.0;
  DickeSpec leaf;
};

/// Enumeration depth cap: 2^30 potential paths is already absurd.
inline constexpr int kMaxTreeDepth = 30;

/// Enumerates every outcome path of `depth` successive measurements on
/// |D_n^(k)>, pruning impossible branches. Paths come back in lexicographic
/// outcome order and their probabilities sum to 1.
std::vector<TreePath> enumerate_tree(const DickeSpec& spec, int depth);

}  // namespace dickesim
