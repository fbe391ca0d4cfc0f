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

#include "dickesim/topology.hpp"

namespace dickesim {

std::string_view to_string(LinkClass value) {
  switch (value) {
    case LinkClass::UNLINK:
      return "UNLINK";
    case LinkClass::BORROMEAN_FRAGILE:
      return "BORROMEAN_FRAGILE";
    case LinkClass::HOPF_LINKED:
      return "HOPF_LINKED";
  }
  return "?";
}

std::string_view to_string(LinkDensity value) {
  switch (value) {
    case LinkDensity::ZERO:
      return "ZERO";
    case LinkDensity::SPARSE:
      return "SPARSE";
    case LinkDensity::MAXIMAL:
      return "MAXIMAL";
    case LinkDensity::INTERMEDIATE:
      return "INTERMEDIATE";
  }
  return "?";
}

std::string_view to_string(Regime value) {
  return value == Regime::RIGID ? "RIGID" : "FLUID";
}

FluidityReport fluidity(const DickeSpec& spec) {
  validate_spec(spec);
  FluidityReport report;
  report.fluidity = binomial(spec.n, spec.k);
  report.fluidity -= 1;
  report.regime = report.fluidity.is_zero() ? Regime::RIGID : Regime::FLUID;
  if (spec.k < spec.n) {
    BigUint value = binomial(spec.n - 1, spec.k);
    value -= 1;
    report.residual_fluidities.emplace(0, std::move(value));
  }
  if (spec.k > 0) {
    BigUint value = binomial(spec.n - 1, spec.k - 1);
    value -= 1;
    report.residual_fluidities.emplace(1, std::move(value));
  }
  return report;
}

TopologyClass classify_dicke(const DickeSpec& spec) {
  validate_spec(spec);
  const std::int64_t n = spec.n;
  const std::int64_t k = spec.k;
  if (k == 0 || k == n) return {LinkClass::UNLINK, LinkDensity::ZERO};
  // The density rules overlap on small registers; balance wins over
  // sparseness because an exactly balanced cut is as entangled as a
  // single-qubit cut ever gets. n = 2, k = 1 is the smallest case: it is
  // both single-excitation and perfectly balanced, and the Schmidt spectrum
  // (equal coefficients) says MAXIMAL.
  if (n % 2 == 0 && k == n / 2) return {LinkClass::HOPF_LINKED, LinkDensity::MAXIMAL};
  if (k == 1 || k == n - 1) return {LinkClass::HOPF_LINKED, LinkDensity::SPARSE};
  if (k == n / 2 || k == n - n / 2) return {LinkClass::HOPF_LINKED, LinkDensity::MAXIMAL};
  return {LinkClass::HOPF_LINKED, LinkDensity::INTERMEDIATE};
}

}  // namespace dickesim
