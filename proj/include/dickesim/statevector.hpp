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

// Dense statevector core. Amplitudes live in an Eigen column vector; every
// operation on them is a free function so expressions stay composable and the
// scalar type stays a template parameter.

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace dickesim {

/// Computational-basis label of an n-qubit register.
///
/// Bit-order convention used throughout: qubit 1 is the most significant bit.
/// On three qubits, index 0b100 means qubit 1 is |1> and qubits 2, 3 are |0>.
struct BasisIndex {
  std::uint64_t index = 0;
  int hamming_weight = 0;

  static BasisIndex of(std::uint64_t index) {
    return {index, std::popcount(index)};
  }

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Number of set bits, i.e. the excitation count of a basis label.
inline int hamming_weight(std::uint64_t index) { return std::popcount(index); }

/// Dense normalized pure state of an n-qubit register.
///
/// Construction normalizes, so an instance always satisfies <psi|psi> = 1 up
/// to roundoff. The amplitude vector is immutable after construction; derived
/// states (projections, permutations) are new instances.
template <class Real = double>
class Statevector {
 public:
  using Complex = std::complex<Real>;
  using VectorC = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  /// Dense-engine cap: 2^20 amplitudes. Larger registers are served by the
  /// closed-form layer, which needs no amplitude storage at all.
  static constexpr int kMaxQubits = 20;

  Statevector(int n_qubits, VectorC amplitudes)
      : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits_ < 1) {
      throw std::invalid_argument("statevector needs at least one qubit");
    }
    if (n_qubits_ > kMaxQubits) {
      throw std::invalid_argument("too large for dense engine; use closed forms");
    }
    if (amps_.size() != (Eigen::Index{1} << n_qubits_)) {
      throw std::invalid_argument("shape error: amplitude vector length must be 2^n");
    }
    const Real norm = amps_.norm();
    if (!(norm > Real(0))) {
      throw std::invalid_argument("zero state cannot be normalized");
    }
    amps_ /= norm;
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const VectorC& amplitudes() const { return amps_; }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

 private:
  /// Pass-key for construction from amplitudes that are already normalized
  /// because they are an exact rearrangement of an existing state's. Skips
  /// the normalizing division, which would otherwise shift every amplitude
  /// by a last-place rounding even though the norm is 1 up to roundoff.
  struct Prenormalized {};
  Statevector(int n_qubits, VectorC amplitudes, Prenormalized)
      : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {}

  template <class R>
  friend Statevector<R> permute_qubits(const Statevector<R>& state,
                                       const std::vector<int>& relabeling);

  int n_qubits_;
  VectorC amps_;
};

/// Builds a normalized state from a sparse map of basis-index amplitudes.
/// Indices missing from the map are zero.
template <class Real = double>
Statevector<Real> make_state(int n_qubits,
                             const std::map<std::uint64_t, std::complex<Real>>& entries) {
  if (n_qubits < 1) throw std::invalid_argument("statevector needs at least one qubit");
  if (n_qubits > Statevector<Real>::kMaxQubits) {
    throw std::invalid_argument("too large for dense engine; use closed forms");
  }
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  typename Statevector<Real>::VectorC amps =
      Statevector<Real>::VectorC::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [index, amplitude] : entries) {
    if (index >= dim) throw std::out_of_range("bad basis index for this qubit count");
    amps(static_cast<Eigen::Index>(index)) = amplitude;
  }
  return Statevector<Real>(n_qubits, std::move(amps));
}

/// <a|b>, conjugate-linear in the first argument.
template <class Real>
std::complex<Real> inner_product(const Statevector<Real>& a, const Statevector<Real>& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("shape error: qubit counts differ");
  }
  return a.amplitudes().dot(b.amplitudes());
}

/// |<a|b>|^2.
template <class Real>
Real fidelity(const Statevector<Real>& a, const Statevector<Real>& b) {
  return std::norm(inner_product(a, b));
}

/// Reshapes the amplitudes across the cut (qubit | rest) into a 2 x 2^(n-1)
/// matrix: row m holds the amplitudes with the chosen qubit in state |m>,
/// columns ordered by the remaining qubits' index with the chosen bit deleted.
template <class Real>
Eigen::Matrix<std::complex<Real>, 2, Eigen::Dynamic> bipartition_matrix(
    const Statevector<Real>& state, int qubit) {
  const int n = state.n_qubits();
  if (n < 2) throw std::invalid_argument("no bipartition exists for a single qubit");
  if (qubit < 1 || qubit > n) throw std::out_of_range("bad qubit");

  const int shift = n - qubit;  // bit position of the chosen qubit (MSB-first labels)
  const std::uint64_t low_mask = (std::uint64_t{1} << shift) - 1;
  const Eigen::Index cols = state.dim() / 2;

  Eigen::Matrix<std::complex<Real>, 2, Eigen::Dynamic> m(2, cols);
  for (Eigen::Index col = 0; col < cols; ++col) {
    const std::uint64_t j = static_cast<std::uint64_t>(col);
    const std::uint64_t base = ((j >> shift) << (shift + 1)) | (j & low_mask);
    m(0, col) = state[static_cast<Eigen::Index>(base)];
    m(1, col) = state[static_cast<Eigen::Index>(base | (std::uint64_t{1} << shift))];
  }
  return m;
}

/// Relabels qubits: `relabeling[q - 1]` names the input qubit that becomes
/// qubit q of the result. The argument must be a permutation of 1..n.
template <class Real>
Statevector<Real> permute_qubits(const Statevector<Real>& state,
                                 const std::vector<int>& relabeling) {
  const int n = state.n_qubits();
  if (static_cast<int>(relabeling.size()) != n) {
    throw std::invalid_argument("shape error: relabeling length must equal qubit count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int q : relabeling) {
    if (q < 1 || q > n || seen[static_cast<std::size_t>(q - 1)]) {
      throw std::invalid_argument("relabeling is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(q - 1)] = true;
  }

  typename Statevector<Real>::VectorC out(state.dim());
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    const std::uint64_t src = static_cast<std::uint64_t>(i);
    std::uint64_t dst = 0;
    for (int q = 1; q <= n; ++q) {
      const int source_qubit = relabeling[static_cast<std::size_t>(q - 1)];
      const std::uint64_t bit = (src >> (n - source_qubit)) & 1u;
      dst |= bit << (n - q);
    }
    out(static_cast<Eigen::Index>(dst)) = state[i];
  }
  // A relabeling only moves amplitudes, so the result is normalized exactly
  // as well as the input was; renormalizing would cost a pass and an ulp.
  return Statevector<Real>(n, std::move(out),
                           typename Statevector<Real>::Prenormalized{});
}

}  // namespace dickesim
