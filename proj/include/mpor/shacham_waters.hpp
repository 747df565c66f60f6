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

#include "mpor/linear_code.hpp"
#include "mpor/por.hpp"
#include "mpor/rational.hpp"
#include "mpor/rng.hpp"

namespace mpor {

// Unconditionally secure Shacham-Waters tags: S[j] = b_j + a * M[j].
// A challenge is a vector c in F_q^n of Hamming weight exactly ell; the
// response is (mu, sigma) = (sum c_j M[j], sum c_j S[j]) and is accepted iff
// sigma = sum c_j b_j + a * mu.
SwKey sw_keygen(std::size_t n, FieldModulus modulus, SeededRng& rng);
Blocks sw_tag(const SwKey& key, std::span<const FieldElement> blocks);
// Throws std::invalid_argument on length mismatches.
Response sw_respond(const ProverData& data, std::span<const FieldElement> challenge);
// Throws std::invalid_argument if the challenge weight is not `ell`.
bool sw_verify(const SwKey& key, std::span<const FieldElement> challenge, const Response& response, std::size_t ell);

// Binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// C(n, ell) (q-1)^ell, the number of weight-ell challenge vectors.
BigInt sw_gamma_weight(std::size_t n, std::size_t ell, FieldModulus modulus);
// q^n, the size of F_q^n.
BigInt sw_gamma_full(std::size_t n, FieldModulus modulus);

// Approximate response-code distance for a distance-d encoded message space:
//   C(n,l)(q-1)^l - C(n-d,l)(q-1)^l - sum_{w>=1} C(d,w) C(n-d,l-w) (q-1)^l / q
Rational sw_dstar(std::size_t n, std::size_t ell, std::size_t d, FieldModulus modulus);

enum class ChallengeCounting { WeightExactly, FullSpace };

// 1 - d*(q-1) / (2 gamma q), gamma chosen by `counting`.
Rational sw_threshold(std::size_t n, std::size_t ell, std::size_t d, FieldModulus modulus,
                      ChallengeCounting counting = ChallengeCounting::WeightExactly);

class ShachamWatersPor final : public PorScheme {
 public:
  // `code` maps messages of length k to n = code.length() blocks.
  ShachamWatersPor(LinearCode code, std::size_t ell);

  const LinearCode& code() const noexcept { return code_; }
  std::size_t ell() const noexcept { return ell_; }

  const FieldModulus& field() const override { return code_.modulus(); }
  std::size_t message_length() const override { return code_.dimension(); }
  std::size_t block_count() const override { return code_.length(); }
  std::uint64_t challenge_count() const override { return gamma_; }
  std::size_t response_width() const override { return 2; }
  bool keyed() const override { return true; }

  Blocks encode(std::span<const FieldElement> message) const override { return code_.encode(message); }
  std::vector<FieldElement> decode(std::span<const FieldElement> blocks) const override { return code_.decode(blocks); }

  // Supports enumerated in lexicographic order, then nonzero coefficient
  // tuples in lexicographic order.
  std::vector<FieldElement> challenge_vector(Challenge c) const;
  Challenge challenge_index(std::span<const FieldElement> vector) const;

  Response respond(const ProverData& data, Challenge c) const override;
  // mu only: sigma depends on the key.
  Response code_symbol(std::span<const FieldElement> blocks, Challenge c) const override;
  Response project(const Response& r) const override;
  bool verify(const Fingerprint& fingerprint, Challenge c, const Response& r) const override;

  // 1 - d~(q-1) / (2 gamma q).
  Rational extraction_threshold(const ResponseCode& code) const override;

 private:
  LinearCode code_;
  std::size_t ell_;
  std::uint64_t gamma_;
  std::uint64_t coefficient_tuples_;
};

}  // namespace mpor
