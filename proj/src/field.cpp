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

#include "mpor/field.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mpor {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("field elements have different moduli");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldModulus::FieldModulus(std::uint64_t q) : q_(q) {
  if (q >= kMaxModulus) throw std::invalid_argument("field modulus must be below 2^61");
  if (!is_prime(q)) throw std::invalid_argument("field modulus " + std::to_string(q) + " is not prime");
}

FieldElement::FieldElement(std::uint64_t value, FieldModulus modulus) noexcept
    : value_(value % modulus.value()), modulus_(modulus) {}

FieldElement FieldElement::from_signed(std::int64_t value, FieldModulus m) noexcept {
  const auto q = static_cast<std::int64_t>(m.value());
  std::int64_t r = value % q;
  if (r < 0) r += q;
  return {static_cast<std::uint64_t>(r), m};
}

FieldElement FieldElement::operator-() const noexcept {
  return {value_ == 0 ? 0 : modulus_.value() - value_, modulus_};
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  const std::uint64_t q = modulus_.value();
  value_ = value_ >= q - rhs.value_ ? value_ - (q - rhs.value_) : value_ + rhs.value_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + (modulus_.value() - rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  value_ = mul_mod(value_, rhs.value_, modulus_.value());
  return *this;
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement field_sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement field_inv(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  // Invariant: old_s * a == old_r (mod q).
  const auto q = static_cast<__int128>(a.modulus().value());
  __int128 old_r = a.value(), r = q;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  __int128 inv = old_s % q;
  if (inv < 0) inv += q;
  return {static_cast<std::uint64_t>(inv), a.modulus()};
}

FieldElement field_div(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * field_inv(b);
}

FieldElement field_pow(FieldElement base, std::uint64_t exponent) {
  return {pow_mod(base.value(), exponent, base.modulus().value()), base.modulus()};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.value(); }

bool lex_less(std::span<const FieldElement> a, std::span<const FieldElement> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const FieldElement& x, const FieldElement& y) { return x.value() < y.value(); });
}

std::vector<FieldElement> to_elements(std::span<const std::uint64_t> values, FieldModulus m) {
  std::vector<FieldElement> out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(v, m);
  return out;
}

std::vector<FieldElement> to_elements(std::initializer_list<std::uint64_t> values, FieldModulus m) {
  return to_elements(std::span<const std::uint64_t>(values.begin(), values.size()), m);
}

std::vector<std::uint64_t> to_values(std::span<const FieldElement> elements) {
  std::vector<std::uint64_t> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.value());
  return out;
}

}  // namespace mpor
