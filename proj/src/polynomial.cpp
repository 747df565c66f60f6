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

#include "mpor/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpor {

Polynomial::Polynomial(std::vector<FieldElement> coefficients, FieldModulus modulus)
    : modulus_(modulus), coefficients_(std::move(coefficients)) {
  for (const auto& c : coefficients_) {
    if (c.modulus() != modulus_) throw std::invalid_argument("polynomial coefficient has wrong modulus");
  }
  trim();
}

FieldElement Polynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : FieldElement::zero(modulus_);
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials have different moduli");
  const std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coefficient(i) + b.coefficient(i));
  return {std::move(out), a.modulus()};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials have different moduli");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.modulus());
  std::vector<FieldElement> out(a.coefficients().size() + b.coefficients().size() - 1, FieldElement::zero(a.modulus()));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
      out[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return {std::move(out), a.modulus()};
}

Polynomial operator*(const Polynomial& a, const FieldElement& scalar) {
  std::vector<FieldElement> out = a.coefficients();
  for (auto& c : out) c *= scalar;
  return {std::move(out), a.modulus()};
}

FieldElement poly_eval(const Polynomial& p, const FieldElement& x) {
  if (p.modulus() != x.modulus()) throw std::invalid_argument("evaluation point has wrong modulus");
  FieldElement acc = FieldElement::zero(p.modulus());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

void check_points(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  const FieldModulus m = points.front().first.modulus();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].first.modulus() != m || points[i].second.modulus() != m) {
      throw std::invalid_argument("interpolation points have different moduli");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i].first == points[j].first) throw std::invalid_argument("duplicate interpolation abscissa");
    }
  }
}

}  // namespace

Polynomial poly_interpolate(std::span<const Point> points) {
  check_points(points);
  const FieldModulus m = points.front().first.modulus();
  Polynomial result(m);
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Basis polynomial L_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j).
    Polynomial basis({FieldElement::one(m)}, m);
    FieldElement denom = FieldElement::one(m);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial({-points[j].first, FieldElement::one(m)}, m);
      denom *= points[i].first - points[j].first;
    }
    result = result + basis * (points[i].second / denom);
  }
  return result;
}

FieldElement interpolate_at(std::span<const Point> points, const FieldElement& x) {
  check_points(points);
  const FieldModulus m = points.front().first.modulus();
  FieldElement acc = FieldElement::zero(m);
  for (std::size_t i = 0; i < points.size(); ++i) {
    FieldElement num = FieldElement::one(m);
    FieldElement denom = FieldElement::one(m);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      num *= x - points[j].first;
      denom *= points[i].first - points[j].first;
    }
    acc += points[i].second * num / denom;
  }
  return acc;
}

std::vector<FieldElement> random_coefficients(std::size_t count, FieldModulus m, SeededRng& rng) {
  std::vector<FieldElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng.element(m));
  return out;
}

Polynomial poly_random(std::size_t degree_bound, FieldModulus m, SeededRng& rng) {
  return {random_coefficients(degree_bound, m, rng), m};
}

}  // namespace mpor
