// Copyright 2026 The mpor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mpor {

// A prime modulus q with 2 <= q < 2^61. Products of two residues fit in
// unsigned __int128, so all field arithmetic is exact.
class FieldModulus {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

  // Throws std::invalid_argument unless q is a prime below 2^61.
  explicit FieldModulus(std::uint64_t q);

  std::uint64_t value() const noexcept { return q_; }

  friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

 private:
  std::uint64_t q_;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

class FieldElement {
 public:
  // Reduces `value` modulo q.
  FieldElement(std::uint64_t value, FieldModulus modulus) noexcept;

  static FieldElement zero(FieldModulus m) noexcept { return {0, m}; }
  static FieldElement one(FieldModulus m) noexcept { return {1, m}; }
  // Maps a signed integer to its canonical residue.
  static FieldElement from_signed(std::int64_t value, FieldModulus m) noexcept;

  std::uint64_t value() const noexcept { return value_; }
  const FieldModulus& modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const noexcept;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  std::uint64_t value_;
  FieldModulus modulus_;
};

// Binary operations throw std::invalid_argument on mismatched moduli.
FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_sub(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
// Extended Euclid. Throws std::domain_error for a == 0.
FieldElement field_inv(const FieldElement& a);
FieldElement field_div(const FieldElement& a, const FieldElement& b);
FieldElement field_pow(FieldElement base, std::uint64_t exponent);

inline FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return field_div(a, b); }

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

// Lexicographic order on canonical values; used for deterministic tie-breaks.
bool lex_less(std::span<const FieldElement> a, std::span<const FieldElement> b);

// Builds a vector of elements from plain integers.
std::vector<FieldElement> to_elements(std::span<const std::uint64_t> values, FieldModulus m);
std::vector<FieldElement> to_elements(std::initializer_list<std::uint64_t> values, FieldModulus m);
std::vector<std::uint64_t> to_values(std::span<const FieldElement> elements);

}  // namespace mpor
