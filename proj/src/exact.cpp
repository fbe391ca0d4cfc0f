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

#include "dickesim/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dickesim {

BigUint::BigUint(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    value >>= 32;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t BigUint::as_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint value exceeds 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

double BigUint::as_double() const {
  double v = 0.0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    v = v * 4294967296.0 + static_cast<double>(*it);
  }
  return v;
}

std::string BigUint::str() const {
  if (is_zero()) return "0";
  // Peel off nine decimal digits at a time.
  BigUint work = *this;
  std::string out;
  while (!work.is_zero()) {
    std::uint32_t chunk = work.divmod_small(1000000000u);
    if (work.is_zero()) {
      out.insert(0, std::to_string(chunk));
    } else {
      std::string digits = std::to_string(chunk);
      out.insert(0, std::string(9 - digits.size(), '0') + digits);
    }
  }
  return out;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(std::uint32_t rhs) {
  std::uint64_t borrow = rhs;
  for (std::size_t i = 0; i < limbs_.size() && borrow != 0; ++i) {
    std::uint64_t limb = limbs_[i];
    if (limb >= borrow) {
      limbs_[i] = static_cast<std::uint32_t>(limb - borrow);
      borrow = 0;
    } else {
      limbs_[i] = static_cast<std::uint32_t>((limb + (std::uint64_t{1} << 32)) - borrow);
      borrow = 1;
    }
  }
  if (borrow != 0) throw std::underflow_error("BigUint subtraction went negative");
  trim();
  return *this;
}

BigUint& BigUint::mul_small(std::uint32_t factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t prod = static_cast<std::uint64_t>(limbs_[i]) * factor + carry;
    limbs_[i] = static_cast<std::uint32_t>(prod);
    carry = prod >> 32;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry));
    carry >>= 32;
  }
  return *this;
}

std::uint32_t BigUint::divmod_small(std::uint32_t divisor) {
  if (divisor == 0) throw std::domain_error("BigUint division by zero");
  std::uint64_t rem = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    std::uint64_t cur = (rem << 32) | *it;
    *it = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

BigUint& BigUint::div_exact_small(std::uint32_t divisor) {
  std::uint32_t rem = divmod_small(divisor);
  if (rem != 0) throw std::logic_error("BigUint division expected to be exact");
  return *this;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("Rational denominator must be positive");
  if (numerator < 0) throw std::invalid_argument("Rational must be non-negative");
  std::int64_t g = std::gcd(numerator, denominator);
  num = numerator / g;
  den = denominator / g;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

}  // namespace dickesim
