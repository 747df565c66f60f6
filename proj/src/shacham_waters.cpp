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

#include "mpor/shacham_waters.hpp"

#include <limits>
#include <stdexcept>

namespace mpor {

namespace {

std::uint64_t small_binomial(std::size_t n, std::size_t k) {
  const BigInt v = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  return v.convert_to<std::uint64_t>();
}

std::size_t weight(std::span<const FieldElement> v) {
  std::size_t w = 0;
  for (const auto& e : v) w += e.is_zero() ? 0 : 1;
  return w;
}

FieldElement dot(std::span<const FieldElement> c, std::span<const FieldElement> v) {
  if (c.size() != v.size()) throw std::invalid_argument("challenge length does not match stored blocks");
  FieldElement acc = FieldElement::zero(c.front().modulus());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) acc += c[j] * v[j];
  }
  return acc;
}

}  // namespace

SwKey sw_keygen(std::size_t n, FieldModulus modulus, SeededRng& rng) {
  SwKey key{rng.element(modulus), {}};
  for (std::size_t j = 0; j < n; ++j) key.b.push_back(rng.element(modulus));
  return key;
}

Blocks sw_tag(const SwKey& key, std::span<const FieldElement> blocks) {
  if (blocks.size() != key.b.size()) throw std::invalid_argument("key length does not match block count");
  Blocks tags;
  tags.reserve(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) tags.push_back(key.b[j] + key.a * blocks[j]);
  return tags;
}

Response sw_respond(const ProverData& data, std::span<const FieldElement> challenge) {
  if (data.tags.size() != data.blocks.size()) throw std::invalid_argument("prover holds mismatched blocks and tags");
  return {dot(challenge, data.blocks), dot(challenge, data.tags)};
}

bool sw_verify(const SwKey& key, std::span<const FieldElement> challenge, const Response& response, std::size_t ell) {
  if (weight(challenge) != ell) throw std::invalid_argument("challenge weight must equal ell");
  if (response.size() != 2) throw std::invalid_argument("Shacham-Waters response is a (mu, sigma) pair");
  return response[1] == dot(challenge, key.b) + key.a * response[0];
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

BigInt sw_gamma_weight(std::size_t n, std::size_t ell, FieldModulus modulus) {
  return binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(ell)) *
         boost::multiprecision::pow(BigInt(modulus.value() - 1), static_cast<unsigned>(ell));
}

BigInt sw_gamma_full(std::size_t n, FieldModulus modulus) {
  return boost::multiprecision::pow(BigInt(modulus.value()), static_cast<unsigned>(n));
}

Rational sw_dstar(std::size_t n, std::size_t ell, std::size_t d, FieldModulus modulus) {
  if (d > n) throw std::invalid_argument("d must lie in [0, n]");
  if (ell < 1 || ell > n) throw std::invalid_argument("ell must lie in [1, n]");
  const auto sn = static_cast<std::int64_t>(n);
  const auto sl = static_cast<std::int64_t>(ell);
  const auto sd = static_cast<std::int64_t>(d);
  const BigInt scale = boost::multiprecision::pow(BigInt(modulus.value() - 1), static_cast<unsigned>(ell));
  Rational result = Rational(binomial(sn, sl) * scale) - Rational(binomial(sn - sd, sl) * scale);
  for (std::int64_t w = 1; w <= sl; ++w) {
    result -= Rational(binomial(sd, w) * binomial(sn - sd, sl - w) * scale, BigInt(modulus.value()));
  }
  return result;
}

Rational sw_threshold(std::size_t n, std::size_t ell, std::size_t d, FieldModulus modulus, ChallengeCounting counting) {
  const Rational dstar = sw_dstar(n, ell, d, modulus);
  const BigInt gamma = counting == ChallengeCounting::WeightExactly ? sw_gamma_weight(n, ell, modulus)
                                                                     : sw_gamma_full(n, modulus);
  const BigInt q = modulus.value();
  return Rational(1) - dstar * Rational(q - 1) / Rational(2 * gamma * q);
}

ShachamWatersPor::ShachamWatersPor(LinearCode code, std::size_t ell) : code_(std::move(code)), ell_(ell) {
  const std::size_t n = code_.length();
  if (ell_ < 1 || ell_ > n) throw std::invalid_argument("challenge weight ell must lie in [1, n]");
  const BigInt gamma = sw_gamma_weight(n, ell_, code_.modulus());
  if (gamma > BigInt(std::numeric_limits<std::uint64_t>::max() / 2)) {
    throw std::invalid_argument("challenge space too large to enumerate");
  }
  gamma_ = gamma.convert_to<std::uint64_t>();
  coefficient_tuples_ = boost::multiprecision::pow(BigInt(code_.modulus().value() - 1), static_cast<unsigned>(ell_))
                            .convert_to<std::uint64_t>();
}

std::vector<FieldElement> ShachamWatersPor::challenge_vector(Challenge c) const {
  check_challenge(c);
  const FieldModulus m = field();
  const std::size_t n = block_count();
  std::uint64_t support_rank = c / coefficient_tuples_;
  std::uint64_t coef_rank = c % coefficient_tuples_;

  std::vector<std::size_t> support;
  std::size_t next = 0;
  for (std::size_t p = 0; p < ell_; ++p) {
    for (std::size_t x = next;; ++x) {
      const std::uint64_t with_x = small_binomial(n - x - 1, ell_ - p - 1);
      if (support_rank < with_x) {
        support.push_back(x);
        next = x + 1;
        break;
      }
      support_rank -= with_x;
    }
  }
  std::vector<FieldElement> v(n, FieldElement::zero(m));
  for (std::size_t p = ell_; p-- > 0;) {
    v[support[p]] = FieldElement(1 + coef_rank % (m.value() - 1), m);
    coef_rank /= m.value() - 1;
  }
  return v;
}

Challenge ShachamWatersPor::challenge_index(std::span<const FieldElement> vector) const {
  const std::size_t n = block_count();
  if (vector.size() != n || weight(vector) != ell_) throw std::invalid_argument("challenge weight must equal ell");
  const std::uint64_t q1 = field().value() - 1;
  std::uint64_t support_rank = 0;
  std::uint64_t coef_rank = 0;
  std::size_t p = 0;
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (vector[x].is_zero()) continue;
    for (std::size_t y = next; y < x; ++y) support_rank += small_binomial(n - y - 1, ell_ - p - 1);
    next = x + 1;
    ++p;
    coef_rank = coef_rank * q1 + (vector[x].value() - 1);
  }
  return support_rank * coefficient_tuples_ + coef_rank;
}

Response ShachamWatersPor::respond(const ProverData& data, Challenge c) const {
  if (data.blocks.size() != block_count()) throw std::invalid_argument("stored block count does not match n");
  return sw_respond(data, challenge_vector(c));
}

Response ShachamWatersPor::code_symbol(std::span<const FieldElement> blocks, Challenge c) const {
  if (blocks.size() != block_count()) throw std::invalid_argument("stored block count does not match n");
  return {dot(challenge_vector(c), blocks)};
}

Response ShachamWatersPor::project(const Response& r) const {
  if (r.empty()) throw std::invalid_argument("empty response");
  return {r.front()};
}

bool ShachamWatersPor::verify(const Fingerprint& fingerprint, Challenge c, const Response& r) const {
  const auto* key = std::get_if<SwKey>(&fingerprint);
  if (key == nullptr) throw std::invalid_argument("Shacham-Waters verification needs a key");
  if (key->b.size() != block_count()) throw std::invalid_argument("key length does not match n");
  if (r.size() != 2) return false;
  return sw_verify(*key, challenge_vector(c), r, ell_);
}

Rational ShachamWatersPor::extraction_threshold(const ResponseCode& code) const {
  const BigInt q = field().value();
  return Rational(1) - Rational(BigInt(code.distance()) * (q - 1)) / Rational(2 * BigInt(code.challenge_count()) * q);
}

}  // namespace mpor
