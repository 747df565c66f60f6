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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpor/field.hpp"

namespace mpor {

using Matrix = std::vector<std::vector<FieldElement>>;

// A linear [N, k] code over F_q given by a generator in standard form [I_k | A],
// so the first k symbols of every codeword are the information word.
class LinearCode {
 public:
  // Throws std::invalid_argument if the generator is ragged, empty, uses
  // another modulus, or its left k x k block is not the identity.
  LinearCode(Matrix generator, FieldModulus modulus);

  // Brings an arbitrary full-rank generator to standard form. Throws if the
  // first k columns are not independent.
  static LinearCode from_generator(Matrix generator, FieldModulus modulus);
  static LinearCode from_values(const std::vector<std::vector<std::uint64_t>>& rows, FieldModulus modulus);

  // [N, k, N-k+1] Reed-Solomon code evaluating polynomials of degree < k at
  // 0, 1, ..., q-1 (and at infinity when N = q + 1), in standard form.
  static LinearCode reed_solomon(FieldModulus modulus, std::size_t length, std::size_t dimension);
  // [n, n, 1] code whose codewords are the messages themselves.
  static LinearCode identity(FieldModulus modulus, std::size_t length);

  const FieldModulus& modulus() const noexcept { return modulus_; }
  const Matrix& generator() const noexcept { return generator_; }
  std::size_t dimension() const noexcept { return generator_.size(); }
  std::size_t length() const noexcept { return generator_.front().size(); }

  std::vector<FieldElement> encode(std::span<const FieldElement> message) const;
  bool contains(std::span<const FieldElement> word) const;
  // Inverse of encode on codewords; throws std::invalid_argument otherwise.
  std::vector<FieldElement> decode(std::span<const FieldElement> codeword) const;

  // q^k, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const;
  // Exact minimum Hamming distance by enumerating all nonzero codewords.
  std::size_t min_distance() const;

 private:
  FieldModulus modulus_;
  Matrix generator_;
};

// The message with lexicographic rank `rank` in F_q^k (first coordinate most significant).
std::vector<FieldElement> message_at_rank(std::uint64_t rank, std::size_t length, FieldModulus modulus);

std::size_t hamming_distance(std::span<const FieldElement> a, std::span<const FieldElement> b);

// Solution set of A x = b over F_q: one particular solution and a basis of the
// null space, or nullopt if inconsistent.
struct LinearSolution {
  std::vector<FieldElement> particular;
  std::vector<std::vector<FieldElement>> null_basis;
};
std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const FieldElement> b, FieldModulus modulus);

}  // namespace mpor
