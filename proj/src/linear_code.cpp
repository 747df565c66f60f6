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

#include "mpor/linear_code.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mpor {

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const FieldElement inv = field_inv(m[row][col]);
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const FieldElement factor = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_shape(const Matrix& g, FieldModulus modulus) {
  if (g.empty() || g.front().empty()) throw std::invalid_argument("generator matrix is empty");
  for (const auto& row : g) {
    if (row.size() != g.front().size()) throw std::invalid_argument("generator matrix is ragged");
    for (const auto& v : row) {
      if (v.modulus() != modulus) throw std::invalid_argument("generator entry has wrong modulus");
    }
  }
  if (g.size() > g.front().size()) throw std::invalid_argument("generator has more rows than columns");
}

}  // namespace

LinearCode::LinearCode(Matrix generator, FieldModulus modulus) : modulus_(modulus), generator_(std::move(generator)) {
  check_shape(generator_, modulus_);
  for (std::size_t i = 0; i < generator_.size(); ++i) {
    for (std::size_t j = 0; j < generator_.size(); ++j) {
      if (generator_[i][j].value() != (i == j ? 1U : 0U)) {
        throw std::invalid_argument("generator matrix is not in standard form");
      }
    }
  }
}

LinearCode LinearCode::from_generator(Matrix generator, FieldModulus modulus) {
  check_shape(generator, modulus);
  const auto pivots = row_reduce(generator, generator.front().size());
  for (std::size_t i = 0; i < generator.size(); ++i) {
    if (i >= pivots.size() || pivots[i] != i) {
      throw std::invalid_argument("generator has no standard form (first k columns dependent)");
    }
  }
  return LinearCode(std::move(generator), modulus);
}

LinearCode LinearCode::from_values(const std::vector<std::vector<std::uint64_t>>& rows, FieldModulus modulus) {
  Matrix g;
  for (const auto& row : rows) g.push_back(to_elements(row, modulus));
  return LinearCode(std::move(g), modulus);
}

LinearCode LinearCode::reed_solomon(FieldModulus modulus, std::size_t length, std::size_t dimension) {
  const std::uint64_t q = modulus.value();
  if (dimension == 0 || dimension > length) throw std::invalid_argument("Reed-Solomon needs 1 <= k <= N");
  if (length > q + 1) throw std::invalid_argument("Reed-Solomon length exceeds q + 1");
  Matrix g(dimension, std::vector<FieldElement>(length, FieldElement::zero(modulus)));
  for (std::size_t col = 0; col < length; ++col) {
    if (col == q) {
      g[dimension - 1][col] = FieldElement::one(modulus);  // point at infinity
      continue;
    }
    const FieldElement x(col, modulus);
    FieldElement power = FieldElement::one(modulus);
    for (std::size_t row = 0; row < dimension; ++row) {
      g[row][col] = power;
      power *= x;
    }
  }
  return from_generator(std::move(g), modulus);
}

LinearCode LinearCode::identity(FieldModulus modulus, std::size_t length) {
  Matrix g(length, std::vector<FieldElement>(length, FieldElement::zero(modulus)));
  for (std::size_t i = 0; i < length; ++i) g[i][i] = FieldElement::one(modulus);
  return LinearCode(std::move(g), modulus);
}

std::vector<FieldElement> LinearCode::encode(std::span<const FieldElement> message) const {
  if (message.size() != dimension()) throw std::invalid_argument("message length does not match code dimension");
  std::vector<FieldElement> out(length(), FieldElement::zero(modulus_));
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (message[i].modulus() != modulus_) throw std::invalid_argument("message symbol has wrong modulus");
    if (message[i].is_zero()) continue;
    for (std::size_t j = 0; j < length(); ++j) out[j] += message[i] * generator_[i][j];
  }
  return out;
}

bool LinearCode::contains(std::span<const FieldElement> word) const {
  if (word.size() != length()) return false;
  const auto reencoded = encode(word.first(dimension()));
  return std::equal(reencoded.begin(), reencoded.end(), word.begin());
}

std::vector<FieldElement> LinearCode::decode(std::span<const FieldElement> codeword) const {
  if (!contains(codeword)) throw std::invalid_argument("word is not a codeword");
  return {codeword.begin(), codeword.begin() + static_cast<std::ptrdiff_t>(dimension())};
}

std::optional<std::uint64_t> LinearCode::size() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / modulus_.value()) return std::nullopt;
    total *= modulus_.value();
  }
  return total;
}

std::size_t LinearCode::min_distance() const {
  const auto count = size();
  if (!count || *count > 50'000'000) throw std::invalid_argument("code too large to enumerate");
  std::size_t best = length();
  for (std::uint64_t rank = 1; rank < *count; ++rank) {
    const auto word = encode(message_at_rank(rank, dimension(), modulus_));
    std::size_t weight = 0;
    for (const auto& v : word) weight += v.is_zero() ? 0 : 1;
    best = std::min(best, weight);
  }
  return best;
}

std::vector<FieldElement> message_at_rank(std::uint64_t rank, std::size_t length, FieldModulus modulus) {
  std::vector<FieldElement> out(length, FieldElement::zero(modulus));
  for (std::size_t i = length; i-- > 0;) {
    out[i] = FieldElement(rank % modulus.value(), modulus);
    rank /= modulus.value();
  }
  return out;
}

std::size_t hamming_distance(std::span<const FieldElement> a, std::span<const FieldElement> b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming distance of vectors with different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] == b[i] ? 0 : 1;
  return d;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const FieldElement> b, FieldModulus modulus) {
  if (a.size() != b.size()) throw std::invalid_argument("system has mismatched row count");
  const std::size_t unknowns = a.empty() ? 0 : a.front().size();
  Matrix aug;
  aug.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != unknowns) throw std::invalid_argument("system matrix is ragged");
    auto row = a[r];
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  const auto pivots = row_reduce(aug, unknowns + 1);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(unknowns, FieldElement::zero(modulus));
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular[pivots[r]] = aug[r][unknowns];
  }
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(unknowns, FieldElement::zero(modulus));
    v[free] = FieldElement::one(modulus);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][free];
    sol.null_basis.push_back(std::move(v));
  }
  return sol;
}

}  // namespace mpor
