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

#include <complex>
#include <stdexcept>

#include "dickesim/topology.hpp"
#include "oracles.hpp"

using dickesim::DickeSpec;
using dickesim::LinkClass;
using dickesim::LinkDensity;
using dickesim::Regime;
using dickesim::TopologyClass;
using dickesim::classify_by_probe;
using dickesim::classify_dicke;
using dickesim::dicke_state;
using Complex = std::complex<double>;

TEST_CASE("fluidity of the single-excitation triple") {
  const auto report = dickesim::fluidity(DickeSpec{3, 1});
  CHECK(report.fluidity.str() == "2");
  CHECK(report.regime == Regime::FLUID);
  REQUIRE(report.residual_fluidities.size() == 2);
  CHECK(report.residual_fluidities.at(0).str() == "1");
  CHECK(report.residual_fluidities.at(1).str() == "0");
}

TEST_CASE("fluidity of rigid boundary states") {
  const auto ground = dickesim::fluidity(DickeSpec{6, 0});
  CHECK(ground.fluidity.is_zero());
  CHECK(ground.regime == Regime::RIGID);
  REQUIRE(ground.residual_fluidities.size() == 1);
  CHECK(ground.residual_fluidities.at(0).is_zero());

  const auto full = dickesim::fluidity(DickeSpec{6, 6});
  CHECK(full.regime == Regime::RIGID);
  REQUIRE(full.residual_fluidities.size() == 1);
  CHECK(full.residual_fluidities.at(1).is_zero());

  const auto empty = dickesim::fluidity(DickeSpec{0, 0});
  CHECK(empty.fluidity.is_zero());
  CHECK(empty.residual_fluidities.empty());
}

TEST_CASE("fluidity of the balanced six-qubit state") {
  const auto report = dickesim::fluidity(DickeSpec{6, 3});
  CHECK(report.fluidity.str() == "19");
  CHECK(report.residual_fluidities.at(0).str() == "9");
  CHECK(report.residual_fluidities.at(1).str() == "9");
}

TEST_CASE("fluidity is FLUID exactly when the superposition has company") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto report = dickesim::fluidity(DickeSpec{n, k});
      const bool boundary = k == 0 || k == n;
      CHECK((report.regime == Regime::RIGID) == boundary);
    }
  }
}

TEST_CASE("residual fluidities close the recursion") {
  for (std::int64_t n = 1; n <= 15; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto report = dickesim::fluidity(DickeSpec{n, k});
      for (const auto& [outcome, value] : report.residual_fluidities) {
        const auto residual = dickesim::residual_spec(DickeSpec{n, k}, outcome);
        CHECK(value == dickesim::fluidity(residual).fluidity);
      }
    }
  }
}

TEST_CASE("classify_dicke on the canonical examples") {
  CHECK(classify_dicke(DickeSpec{4, 0}) ==
        TopologyClass{LinkClass::UNLINK, LinkDensity::ZERO});
  CHECK(classify_dicke(DickeSpec{4, 4}) ==
        TopologyClass{LinkClass::UNLINK, LinkDensity::ZERO});
  CHECK(classify_dicke(DickeSpec{3, 1}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::SPARSE});
  CHECK(classify_dicke(DickeSpec{5, 1}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::SPARSE});
  CHECK(classify_dicke(DickeSpec{5, 4}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::SPARSE});
  CHECK(classify_dicke(DickeSpec{8, 4}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::MAXIMAL});
  CHECK(classify_dicke(DickeSpec{6, 2}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::INTERMEDIATE});
  CHECK(classify_dicke(DickeSpec{7, 2}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::INTERMEDIATE});
}

TEST_CASE("balance beats sparseness where the rules overlap") {
  // The two-qubit shared excitation is simultaneously k = 1 and k = n/2; its
  // Schmidt spectrum is flat, so MAXIMAL is the truthful label.
  CHECK(classify_dicke(DickeSpec{2, 1}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::MAXIMAL});
  // Odd registers have two balanced values and no exactly-even split.
  CHECK(classify_dicke(DickeSpec{5, 2}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::MAXIMAL});
  CHECK(classify_dicke(DickeSpec{5, 3}) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::MAXIMAL});
  // But k = 1 stays SPARSE once balance moves away from it.
  CHECK(classify_dicke(DickeSpec{3, 1}).density == LinkDensity::SPARSE);
}

TEST_CASE("classify_dicke density never contradicts the link class") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto cls = classify_dicke(DickeSpec{n, k});
      CHECK((cls.link == LinkClass::UNLINK) == (cls.density == LinkDensity::ZERO));
    }
  }
}

TEST_CASE("probe classifies the three canonical small states") {
  CHECK(classify_by_probe(dickesim::ghz_state(3)).link ==
        LinkClass::BORROMEAN_FRAGILE);
  CHECK(classify_by_probe(dicke_state(DickeSpec{3, 1})) ==
        TopologyClass{LinkClass::HOPF_LINKED, LinkDensity::SPARSE});
  const auto product = dickesim::make_state(3, {{0, Complex(1, 0)}});
  CHECK(classify_by_probe(product) ==
        TopologyClass{LinkClass::UNLINK, LinkDensity::ZERO});
}

TEST_CASE("probe agrees with classify_dicke across the dense range") {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(classify_by_probe(dicke_state(DickeSpec{n, k})) ==
            classify_dicke(DickeSpec{n, k}));
    }
  }
}

TEST_CASE("GHZ fragility holds at every size probed") {
  for (int n = 3; n <= 7; ++n) {
    const auto cls = classify_by_probe(dickesim::ghz_state(n));
    CHECK(cls.link == LinkClass::BORROMEAN_FRAGILE);
    CHECK(cls.density == LinkDensity::INTERMEDIATE);  // GHZ is no Dicke state
  }
}

TEST_CASE("probe reports INTERMEDIATE density for unrecognized entangled states") {
  // Lopsided two-excitation superposition: entangled, robust, not Dicke.
  const auto skewed = dickesim::make_state(
      3, {{1, Complex(2, 0)}, {2, Complex(1, 0)}, {4, Complex(1, 0)}});
  const auto cls = classify_by_probe(skewed);
  CHECK(cls.link == LinkClass::HOPF_LINKED);
  CHECK(cls.density == LinkDensity::INTERMEDIATE);
}

TEST_CASE("probe requires at least three qubits") {
  const auto bell = dickesim::ghz_state(2);
  CHECK_THROWS_WITH_AS(classify_by_probe(bell), doctest::Contains("at least 3"),
                       std::invalid_argument);
}

TEST_CASE("fluid Dicke states are linked across every cut") {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto state = dicke_state(DickeSpec{n, k});
      const auto report = dickesim::fluidity(DickeSpec{n, k});
      REQUIRE(report.regime == Regime::FLUID);
      for (int qubit = 1; qubit <= n; ++qubit) {
        CHECK(entanglement_verdict(schmidt(state, qubit)) == dickesim::Verdict::LINKED);
      }
    }
  }
}

TEST_CASE("enum names render as their wire labels") {
  CHECK(dickesim::to_string(LinkClass::UNLINK) == "UNLINK");
  CHECK(dickesim::to_string(LinkClass::BORROMEAN_FRAGILE) == "BORROMEAN_FRAGILE");
  CHECK(dickesim::to_string(LinkClass::HOPF_LINKED) == "HOPF_LINKED");
  CHECK(dickesim::to_string(LinkDensity::ZERO) == "ZERO");
  CHECK(dickesim::to_string(LinkDensity::SPARSE) == "SPARSE");
  CHECK(dickesim::to_string(LinkDensity::MAXIMAL) == "MAXIMAL");
  CHECK(dickesim::to_string(LinkDensity::INTERMEDIATE) == "INTERMEDIATE");
  CHECK(dickesim::to_string(Regime::RIGID) == "RIGID");
  CHECK(dickesim::to_string(Regime::FLUID) == "FLUID");
}
