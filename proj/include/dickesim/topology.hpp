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

// Operational-topological classification. The link analogy is operational:
// a register is Borromean-like when any single measurement disentangles
// everything that remains (GHZ), and Hopf-like when every qubit has at least
// one outcome whose survivors stay entangled (Dicke states away from the
// boundaries). The classifier exists in two independent forms - a closed-form
// rule on (n, k) and a measurement probe on dense amplitudes - precisely so
// they can be played against each other.

#include <map>
#include <string_view>

#include "dickesim/dicke.hpp"
#include "dickesim/exact.hpp"
#include "dickesim/measurement.hpp"
#include "dickesim/quantifiers.hpp"
#include "dickesim/statevector.hpp"

namespace dickesim {

/// How the register responds to losing one qubit to measurement.
enum class LinkClass {
  UNLINK,             ///< Product state; nothing is linked to begin with.
  BORROMEAN_FRAGILE,  ///< Globally entangled, but any one measurement unlinks the rest.
  HOPF_LINKED,        ///< Pairwise-robust: entanglement can survive any qubit's loss.
};

/// How much of the maximally possible linking the state realizes.
enum class LinkDensity {
  ZERO,          ///< No entanglement at all.
  SPARSE,        ///< Single excitation or single hole: k = 1 or k = n - 1.
  MAXIMAL,       ///< Balanced excitation, k as close to n/2 as integers allow.
  INTERMEDIATE,  ///< Everything between sparse and balanced.
};

/// Whether measurement can reshape the superposition at all.
enum class Regime {
  RIGID,  ///< One basis term; every measurement outcome is predetermined.
  FLUID,  ///< Genuine superposition; outcomes redistribute the excitations.
};

struct TopologyClass {
  LinkClass link = LinkClass::UNLINK;
  LinkDensity density = LinkDensity::ZERO;

  friend bool operator==(const TopologyClass&, const TopologyClass&) = default;
};

std::string_view to_string(LinkClass value);
std::string_view to_string(LinkDensity value);
std::string_view to_string(Regime value);

/// Link fluidity of |D_n^(k)> and of each measurement branch.
struct FluidityReport {
  /// C(n, k) - 1: the number of superposition terms beyond the first, i.e.
  /// the state's l1-coherence. Zero exactly for the rigid boundary states.
  BigUint fluidity;
  Regime regime = Regime::RIGID;
  /// Fluidity of the residual per outcome; impossible branches are absent.
  std::map<int, BigUint> residual_fluidities;
};

/// Closed-form fluidity of |D_n^(k)> and its one-measurement residuals.
FluidityReport fluidity(const DickeSpec& spec);

/// Closed-form classification of |D_n^(k)> from (n, k) alone.
TopologyClass classify_dicke(const DickeSpec& spec);

/// Classification by direct experiment on a dense state, sharing no logic
/// with classify_dicke. Measures every qubit both ways and inspects the
/// survivors' Schmidt ranks:
///
///  - no entangled cut anywhere: UNLINK;
///  - every qubit keeps some branch whose survivors stay entangled across at
///    least one cut: HOPF_LINKED;
///  - otherwise (some qubit's loss certainly disentangles the remainder,
///    GHZ being the extreme case where every qubit's does): BORROMEAN_FRAGILE.
///
/// Density comes from Dicke recognition when it applies; unrecognized
/// entangled states report INTERMEDIATE.
template <class Real>
TopologyClass classify_by_probe(const Statevector<Real>& state) {
  const int n = state.n_qubits();
  if (n < 3) throw std::invalid_argument("probe needs at least 3 qubits");

  bool any_cut_entangled = false;
  for (int q = 1; q <= n && !any_cut_entangled; ++q) {
    any_cut_entangled = entanglement_verdict(schmidt(state, q)) == Verdict::LINKED;
  }
  if (!any_cut_entangled) return {LinkClass::UNLINK, LinkDensity::ZERO};

  bool every_qubit_has_survivor = true;
  for (int q = 1; q <= n; ++q) {
    bool survivor = false;
    for (int outcome = 0; outcome <= 1 && !survivor; ++outcome) {
      if (outcome_probability(state, q, outcome) < Real(kZeroProbabilityThreshold)) {
        continue;
      }
      const auto projected = project(state, q, outcome);
      const Statevector<Real>& post = *projected.post;  // n >= 3, so present
      for (int cut = 1; cut <= post.n_qubits() && !survivor; ++cut) {
        survivor = entanglement_verdict(schmidt(post, cut)) == Verdict::LINKED;
      }
    }
    if (!survivor) {
      every_qubit_has_survivor = false;
      break;
    }
  }

  const LinkClass link =
      every_qubit_has_survivor ? LinkClass::HOPF_LINKED : LinkClass::BORROMEAN_FRAGILE;
  LinkDensity density = LinkDensity::INTERMEDIATE;
  if (const auto spec = recognize_dicke(state)) {
    density = classify_dicke(*spec).density;
  }
  return {link, density};
}

}  // namespace dickesim
