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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dickesim/dicke.hpp"
#include "dickesim/measurement.hpp"
#include "dickesim/quantifiers.hpp"
#include "dickesim/rng.hpp"
#include "oracles.hpp"

using dickesim::DickeSpec;
using dickesim::Verdict;
using dickesim::dicke_state;
using dickesim::l1_coherence;
using dickesim::l1_coherence_density;
using dickesim::schmidt;
using Complex = std::complex<double>;

TEST_CASE("schmidt of a product state is rank one") {
  const auto zeros = dickesim::make_state(2, {{0, Complex(1, 0)}});
  const auto result = schmidt(zeros, 1);
  REQUIRE(result.rank == 1);
  CHECK(result.coefficients.size() == 1);
  CHECK(result.coefficients[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(result.is_maximal);
  CHECK(result.tolerance_used == dickesim::kSchmidtTolerance);
  CHECK(entanglement_verdict(result) == Verdict::UNLINKED);
}

TEST_CASE("schmidt of the balanced four-qubit state is maximal") {
  const auto result = schmidt(dicke_state(DickeSpec{4, 2}), 1);
  REQUIRE(result.rank == 2);
  CHECK(result.coefficients[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(result.coefficients[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(result.is_maximal);
  CHECK(entanglement_verdict(result) == Verdict::LINKED);
}

TEST_CASE("schmidt of the single-excitation triple is lopsided") {
  const auto result = schmidt(dicke_state(DickeSpec{3, 1}), 1);
  REQUIRE(result.rank == 2);
  CHECK(result.coefficients[0] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-13));
  CHECK(result.coefficients[1] == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-13));
  CHECK_FALSE(result.is_maximal);
}

TEST_CASE("schmidt squares always sum to one") {
  dickesim::SplitMix64 rng(55);
  for (int n = 2; n <= 7; ++n) {
    const auto state = testoracle::random_state(rng, n);
    for (int qubit = 1; qubit <= n; ++qubit) {
      const auto result = schmidt(state, qubit);
      double total = 0.0;
      for (double c : result.coefficients) total += c * c;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("schmidt honors the tolerance argument and records it") {
  // cos(t)|00> + sin(t)|11> with sin(t) beneath, then above, the cutoff.
  const double tiny = 1e-12;
  const auto nearly_product = dickesim::make_state(
      2, {{0, Complex(std::sqrt(1.0 - tiny * tiny), 0)}, {3, Complex(tiny, 0)}});
  const auto strict = schmidt(nearly_product, 1);
  CHECK(strict.rank == 1);
  CHECK(entanglement_verdict(strict) == Verdict::UNLINKED);

  const double small = 1e-8;
  const auto slightly_entangled = dickesim::make_state(
      2, {{0, Complex(std::sqrt(1.0 - small * small), 0)}, {3, Complex(small, 0)}});
  const auto detected = schmidt(slightly_entangled, 1);
  CHECK(detected.rank == 2);
  CHECK(entanglement_verdict(detected) == Verdict::LINKED);

  // The same state drops to rank 1 under a looser cutoff, and the result
  // remembers which cutoff produced it.
  const auto loose = schmidt(slightly_entangled, 1, 1e-3);
  CHECK(loose.rank == 1);
  CHECK(loose.tolerance_used == 1e-3);
}

TEST_CASE("schmidt agrees with the closed-form spectrum on Dicke cuts") {
  for (int n = 2; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto state = dicke_state(DickeSpec{n, k});
      const auto result = schmidt(state, 1);
      const double p0 = static_cast<double>(n - k) / n;
      const double p1 = static_cast<double>(k) / n;
      const double big = std::sqrt(std::max(p0, p1));
      const double small = std::sqrt(std::min(p0, p1));
      if (k == 0 || k == n) {
        CHECK(result.rank == 1);
        CHECK(result.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
      } else {
        REQUIRE(result.rank == 2);
        CHECK(result.coefficients[0] == doctest::Approx(big).epsilon(1e-12));
        CHECK(result.coefficients[1] == doctest::Approx(small).epsilon(1e-12));
        CHECK(result.is_maximal == (2 * k == n));
      }
    }
  }
}

TEST_CASE("basis states carry no coherence") {
  const auto basis = dickesim::make_state(3, {{0b101, Complex(1, 0)}});
  CHECK(l1_coherence(basis) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(l1_coherence_density(basis) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("known coherence values") {
  const auto plus = dickesim::make_state(1, {{0, Complex(1, 0)}, {1, Complex(1, 0)}});
  CHECK(l1_coherence(plus) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(l1_coherence_density(plus) == doctest::Approx(1.0).epsilon(1e-13));

  CHECK(l1_coherence(dickesim::ghz_state(3)) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(l1_coherence(dicke_state(DickeSpec{3, 1})) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // C(4, 2) - 1 = 5.
  CHECK(l1_coherence(dicke_state(DickeSpec{4, 2})) ==
        doctest::Approx(5.0).epsilon(1e-12));
  CHECK(l1_coherence_density(dicke_state(DickeSpec{4, 2})) ==
        doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("coherence is phase-insensitive") {
  const auto spun = dickesim::make_state(
      3, {{1, Complex(0, 1)}, {2, Complex(-1, 0)}, {4, Complex(0, -1)}});
  CHECK(l1_coherence(spun) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("both coherence routes agree on random states") {
  dickesim::SplitMix64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 8);
    const auto state = testoracle::random_state(rng, n);
    const double direct = l1_coherence(state);
    const double via_density = l1_coherence_density(state);
    CHECK(std::abs(direct - via_density) <= 1e-9);
  }
}

TEST_CASE("density route refuses oversized registers") {
  CHECK_THROWS_WITH_AS(l1_coherence_density(dicke_state(DickeSpec{11, 5})),
                       doctest::Contains("density matrix too large"),
                       std::invalid_argument);
}

TEST_CASE("coherence shrinks strictly along measurement branches") {
  for (auto [n, k] : {std::pair<int, int>{5, 2}, {6, 3}, {7, 1}}) {
    const auto before = l1_coherence(dicke_state(DickeSpec{n, k}));
    for (int outcome : {0, 1}) {
      const auto projected = dickesim::project(dicke_state(DickeSpec{n, k}), 1, outcome);
      CHECK(l1_coherence(*projected.post) < before);
    }
  }
}

TEST_CASE("float instantiation of the quantifiers") {
  using ComplexF = std::complex<float>;
  const auto bell =
      dickesim::make_state<float>(2, {{0, ComplexF(1, 0)}, {3, ComplexF(1, 0)}});
  CHECK(l1_coherence(bell) == doctest::Approx(1.0f).epsilon(1e-5));
  const auto result = schmidt(bell, 1, 1e-5f);
  CHECK(result.rank == 2);
  CHECK(result.is_maximal);
}
