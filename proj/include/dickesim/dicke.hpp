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

// Symmetric Dicke states |D_n^(k)>: the equal-amplitude superposition of all
// n-qubit basis states carrying exactly k excitations. Two engines coexist:
// dense amplitude vectors up to Statevector::kMaxQubits, and exact closed
// forms (this header's profile functions) far beyond that.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "dickesim/exact.hpp"
#include "dickesim/statevector.hpp"

namespace dickesim {

/// Identifies |D_n^(k)>: n qubits sharing exactly k excitations.
///
/// n = 0 with k = 0 denotes the empty register that a measurement cascade
/// consuming every qubit terminates in; it has no statevector.
struct DickeSpec {
  std::int64_t n = 0;
  std::int64_t k = 0;

  friend bool operator==(const DickeSpec&, const DickeSpec&) = default;
};

/// Upper bound accepted by the closed-form engine. Chosen so a single profile
/// evaluation stays well under a second; the dense engine's far smaller cap
/// is Statevector::kMaxQubits.
inline constexpr std::int64_t kMaxClosedFormQubits = 100000;

/// Throws std::invalid_argument unless 0 <= k <= n <= kMaxClosedFormQubits.
inline void validate_spec(const DickeSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("qubit count must be non-negative");
  if (spec.n > kMaxClosedFormQubits) {
    throw std::invalid_argument("qubit count exceeds closed-form engine limit");
  }
  if (spec.k < 0 || spec.k > spec.n) {
    throw std::invalid_argument("excitation count out of range: need 0 <= k <= n");
  }
}

/// Exact binomial coefficient C(n, k); zero when k is outside 0..n.
BigUint binomial(std::int64_t n, std::int64_t k);

/// Everything the closed-form engine knows about |D_n^(k)> without touching
/// amplitudes. All fields follow from (n, k) alone.
struct ClosedFormProfile {
  BigUint dim;        ///< Superposition terms: C(n, k).
  BigUint coherence;  ///< l1-coherence: C(n, k) - 1.
  Rational p0;        ///< Born probability of outcome 0 on any one qubit: (n-k)/n.
  Rational p1;        ///< Born probability of outcome 1: k/n.
  /// Schmidt coefficients across any (1 qubit | rest) cut, as
  /// (sqrt((n-k)/n), sqrt(k/n)).
  std::array<double, 2> schmidt_coeffs{1.0, 0.0};
  /// 1 at the product-state boundaries k = 0 and k = n, else exactly 2.
  int schmidt_rank = 1;
};

/// Closed-form profile of |D_n^(k)>. Requires a valid spec with n >= 1.
ClosedFormProfile closed_form_profile(const DickeSpec& spec);

/// Spec of the register left after measuring one qubit of |D_n^(k)>:
/// outcome 0 keeps all k excitations on n - 1 qubits, outcome 1 consumes one.
/// Throws for the impossible branches (outcome 1 of k = 0, outcome 0 of k = n).
DickeSpec residual_spec(const DickeSpec& spec, int outcome);

/// Dense |D_n^(k)>: amplitude 1/sqrt(C(n, k)) on every weight-k basis index.
template <class Real = double>
Statevector<Real> dicke_state(const DickeSpec& spec) {
  validate_spec(spec);
  if (spec.n < 1) throw std::invalid_argument("statevector needs at least one qubit");
  if (spec.n > Statevector<Real>::kMaxQubits) {
    throw std::invalid_argument("too large for dense engine; use closed forms");
  }
  const int n = static_cast<int>(spec.n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  const Real amp = Real(1) / std::sqrt(binomial(spec.n, spec.k).as_double());
  typename Statevector<Real>::VectorC amps =
      Statevector<Real>::VectorC::Zero(static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (hamming_weight(i) == spec.k) amps(static_cast<Eigen::Index>(i)) = amp;
  }
  return Statevector<Real>(n, std::move(amps));
}

/// Dense GHZ state (|00...0> + |11...1>) / sqrt(2).
template <class Real = double>
Statevector<Real> ghz_state(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("GHZ needs >= 2 qubits");
  if (n_qubits > Statevector<Real>::kMaxQubits) {
    throw std::invalid_argument("too large for dense engine; use closed forms");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  typename Statevector<Real>::VectorC amps =
      Statevector<Real>::VectorC::Zero(dim);
  amps(0) = std::complex<Real>(1, 0);
  amps(dim - 1) = std::complex<Real>(1, 0);
  return Statevector<Real>(n_qubits, std::move(amps));
}

/// W state: one shared excitation, |D_n^(1)>.
template <class Real = double>
Statevector<Real> w_state(int n_qubits) {
  return dicke_state<Real>(DickeSpec{n_qubits, 1});
}

/// Inverted-W state: one shared hole, |D_n^(n-1)>.
template <class Real = double>
Statevector<Real> inverted_w_state(int n_qubits) {
  return dicke_state<Real>(DickeSpec{n_qubits, n_qubits - 1});
}

/// Fidelity threshold below which a state no longer counts as a Dicke state.
inline constexpr double kDickeRecognitionTolerance = 1e-10;

/// Identifies which |D_n^(k)>, if any, the state is (up to global phase and
/// numerical noise). Projects onto each fixed-excitation Dicke state in turn;
/// the best fidelity wins if it clears 1 - kDickeRecognitionTolerance.
template <class Real>
std::optional<DickeSpec> recognize_dicke(const Statevector<Real>& state) {
  const int n = state.n_qubits();
  // <D_n^(w)|psi> is the plain amplitude sum over weight-w indices, scaled by
  // the Dicke normalization.
  std::vector<std::complex<Real>> weight_sums(static_cast<std::size_t>(n) + 1);
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    weight_sums[static_cast<std::size_t>(hamming_weight(static_cast<std::uint64_t>(i)))] +=
        state[i];
  }
  std::int64_t best_k = -1;
  Real best_fidelity = 0;
  for (int w = 0; w <= n; ++w) {
    const Real f = std::norm(weight_sums[static_cast<std::size_t>(w)]) /
                   static_cast<Real>(binomial(n, w).as_double());
    if (f > best_fidelity) {
      best_fidelity = f;
      best_k = w;
    }
  }
  if (best_fidelity >= Real(1) - Real(kDickeRecognitionTolerance)) {
    return DickeSpec{n, best_k};
  }
  return std::nullopt;
}

}  // namespace dickesim
