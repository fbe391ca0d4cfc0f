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

#include "dickesim/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dickesim {

BigUint binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial needs non-negative n");
  if (n > kMaxClosedFormQubits) {
    throw std::invalid_argument("qubit count exceeds closed-form engine limit");
  }
  if (k < 0 || k > n) return BigUint(0);
  k = std::min(k, n - k);
  // Multiplicative form: each partial product C(n-k+i, i) is itself a
  // binomial coefficient, so every division is exact.
  BigUint result(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    result.mul_small(static_cast<std::uint32_t>(n - k + i));
    result.div_exact_small(static_cast<std::uint32_t>(i));
  }
  return result;
}

ClosedFormProfile closed_form_profile(const DickeSpec& spec) {
  validate_spec(spec);
  if (spec.n < 1) {
    throw std::invalid_argument("closed-form profile needs at least one qubit");
  }
  ClosedFormProfile profile;
  profile.dim = binomial(spec.n, spec.k);
  profile.coherence = profile.dim;
  profile.coherence -= 1;
  profile.p0 = Rational(spec.n - spec.k, spec.n);
  profile.p1 = Rational(spec.k, spec.n);
  profile.schmidt_coeffs = {std::sqrt(profile.p0.value()), std::sqrt(profile.p1.value())};
  profile.schmidt_rank = (spec.k == 0 || spec.k == spec.n) ? 1 : 2;
  return profile;
}

DickeSpec residual_spec(const DickeSpec& spec, int outcome) {
  validate_spec(spec);
  if (spec.n < 1) throw std::invalid_argument("empty register has no residual");
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");
  if (outcome == 0 && spec.k == spec.n) {
    throw std::domain_error("zero-probability branch: every qubit is excited");
  }
  if (outcome == 1 && spec.k == 0) {
    throw std::domain_error("zero-probability branch: no excitation to find");
  }
  return DickeSpec{spec.n - 1, spec.k - outcome};
}

}  // namespace dickesim
