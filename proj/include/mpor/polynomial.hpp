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

#include <span>
#include <utility>
#include <vector>

#include "mpor/field.hpp"
#include "mpor/rng.hpp"

namespace mpor {

// Univariate polynomial over F_q, coefficients lowest degree first.
// Canonical form has no trailing zero coefficients; the zero polynomial has
// an empty coefficient list and degree -1.
class Polynomial {
 public:
  explicit Polynomial(FieldModulus modulus) : modulus_(modulus) {}
  Polynomial(std::vector<FieldElement> coefficients, FieldModulus modulus);

  const FieldModulus& modulus() const noexcept { return modulus_; }
  const std::vector<FieldElement>& coefficients() const noexcept { return coefficients_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  // Coefficient of x^i, zero beyond the degree.
  FieldElement coefficient(std::size_t i) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  FieldModulus modulus_;
  std::vector<FieldElement> coefficients_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const FieldElement& scalar);

// Horner evaluation. Throws std::invalid_argument on modulus mismatch.
FieldElement poly_eval(const Polynomial& p, const FieldElement& x);

using Point = std::pair<FieldElement, FieldElement>;

// Lagrange interpolation: the unique polynomial of degree < points.size()
// through all points. Throws std::invalid_argument on duplicate abscissae or
// an empty point set.
Polynomial poly_interpolate(std::span<const Point> points);

// Value at x of the interpolating polynomial, without building it.
FieldElement interpolate_at(std::span<const Point> points, const FieldElement& x);

// `count` independent uniform field elements.
std::vector<FieldElement> random_coefficients(std::size_t count, FieldModulus m, SeededRng& rng);

// Uniform polynomial of degree at most degree_bound - 1.
Polynomial poly_random(std::size_t degree_bound, FieldModulus m, SeededRng& rng);

}  // namespace mpor
