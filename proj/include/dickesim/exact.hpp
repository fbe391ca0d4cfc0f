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

// Exact arithmetic support. Superposition dimensions and coherence magnitudes
// are binomial coefficients, which outgrow 64-bit range near n = 68; they are
// kept exact end to end and converted to double only at reporting boundaries.

#include <cstdint>
#include <string>
#include <vector>

namespace dickesim {

/// Arbitrary-precision unsigned integer.
///
/// Supports exactly the operations the combinatorial closed forms need:
/// addition, small subtraction, multiplication and exact division by machine
/// words, ordering, and decimal conversion.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t as_u64() const;
  double as_double() const;
  std::string str() const;

  BigUint& operator+=(const BigUint& rhs);
  /// Subtracts a machine word; the result must stay non-negative.
  BigUint& operator-=(std::uint32_t rhs);
  BigUint& mul_small(std::uint32_t factor);
  /// In-place division by a machine word; returns the remainder.
  std::uint32_t divmod_small(std::uint32_t divisor);
  /// Division by a machine word known to divide evenly.
  BigUint& div_exact_small(std::uint32_t divisor);

  static int compare(const BigUint& a, const BigUint& b);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigUint operator-(BigUint lhs, std::uint32_t rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend bool operator==(const BigUint&, const BigUint&) = default;
  friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

 private:
  // Base 2^32 limbs, least significant first, no trailing zero limbs
  // (canonical form, so vector equality is value equality; empty means zero).
  std::vector<std::uint32_t> limbs_;

  void trim();
};

/// Reduced non-negative rational. Branch probabilities have denominators no
/// larger than the qubit count, so machine integers never overflow here.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// "2/3"; integral values render without the denominator.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace dickesim
