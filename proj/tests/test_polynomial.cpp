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

#include <doctest.h>

#include <stdexcept>

#include "mpor/polynomial.hpp"

using namespace mpor;

TEST_CASE("evaluation of the six-prover sharing polynomial over F17") {
  const FieldModulus m(17);
  const Polynomial f(to_elements({15, 3, 1, 2}, m), m);
  const std::uint64_t expected[] = {4, 7, 2, 1, 16, 8};
  for (std::uint64_t i = 1; i <= 6; ++i) CHECK(poly_eval(f, FieldElement(i, m)).value() == expected[i - 1]);
}

TEST_CASE("zero polynomial and trimming") {
  const FieldModulus m(7);
  const Polynomial z(m);
  CHECK(z.degree() == -1);
  CHECK(z.is_zero());
  CHECK(poly_eval(z, FieldElement(3, m)).is_zero());
  const Polynomial p(to_elements({1, 2, 0, 0}, m), m);
  CHECK(p.degree() == 1);
  CHECK(p.coefficient(5).is_zero());
}

TEST_CASE("arithmetic") {
  const FieldModulus m(7);
  const Polynomial a(to_elements({1, 1}, m), m);
  const Polynomial b(to_elements({6, 1}, m), m);  // x - 1
  CHECK((a * b) == Polynomial(to_elements({6, 0, 1}, m), m));
  CHECK((a + b) == Polynomial(to_elements({0, 2}, m), m));
  CHECK((a * FieldElement(0, m)).is_zero());
}

TEST_CASE("interpolation inverts evaluation") {
  const FieldModulus m(101);
  SeededRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f = poly_random(6, m, rng);
    std::vector<Point> pts;
    for (std::uint64_t x = 1; x <= 6; ++x) pts.emplace_back(FieldElement(x, m), poly_eval(f, FieldElement(x, m)));
    CHECK(poly_interpolate(pts) == f);
    CHECK(interpolate_at(pts, FieldElement(50, m)) == poly_eval(f, FieldElement(50, m)));
  }
}

TEST_CASE("interpolation errors") {
  const FieldModulus m(7);
  std::vector<Point> none;
  CHECK_THROWS_AS(poly_interpolate(none), std::invalid_argument);
  std::vector<Point> dup = {{FieldElement(1, m), FieldElement(2, m)}, {FieldElement(1, m), FieldElement(3, m)}};
  CHECK_THROWS_AS(poly_interpolate(dup), std::invalid_argument);
}
