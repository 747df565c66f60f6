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
#include <set>
#include <span>
#include <vector>

#include "mpor/field.hpp"
#include "mpor/linear_code.hpp"
#include "mpor/rng.hpp"

namespace mpor {

// (tau1, tau2, rho) ramp scheme parameters over F_q with secret length s.
struct RampParams {
  std::size_t tau1 = 0;  // coalitions this small learn nothing
  std::size_t tau2 = 1;  // coalitions this large reconstruct
  std::size_t rho = 1;   // number of shares
  std::size_t s = 1;     // secret length in field elements
  FieldModulus modulus{2};

  // Throws std::invalid_argument with a message naming the violated constraint.
  void validate() const;

  friend bool operator==(const RampParams&, const RampParams&) = default;
};

struct Share {
  std::size_t index = 0;  // in [1, rho]
  // One element per shared block.
  std::vector<FieldElement> value;

  friend bool operator==(const Share&, const Share&) = default;
};

struct ShareVector {
  RampParams params;
  std::vector<Share> shares;

  const Share& at(std::size_t index) const;
  // The shares with the given indices, in the given order.
  ShareVector subset(std::span<const std::size_t> indices) const;
};

struct DistributionComparison {
  bool identical = false;
  std::uint64_t coin_choices = 0;
  std::size_t support_first = 0;
  std::size_t support_second = 0;
};

class RampScheme {
 public:
  enum class Kind { ReedSolomon, LinearCode };

  // Secret a_0..a_{s-1} and tau1 uniform coefficients a_s..a_{tau2-1} form
  // f(x); share i is f(i). Requires q > rho so the points 1..rho are distinct
  // and nonzero.
  static RampScheme reed_solomon(std::size_t tau1, std::size_t tau2, std::size_t rho, FieldModulus modulus);
  // The (0, 1, rho) scheme: every share equals the secret.
  static RampScheme replication(std::size_t rho, FieldModulus modulus);
  // Random codeword whose first s symbols are the secret; shares are the
  // remaining N - s symbols. tau1 and tau2 are supplied by the caller.
  static RampScheme from_code(LinearCode code, std::size_t s, std::size_t tau1, std::size_t tau2);

  Kind kind() const noexcept { return kind_; }
  const RampParams& params() const noexcept { return params_; }
  const std::optional<LinearCode>& code() const noexcept { return code_; }
  // Uniform field elements consumed per shared block.
  std::size_t coin_count() const noexcept;

  ShareVector share_gen(std::span<const FieldElement> secret, SeededRng& rng) const;
  ShareVector share_gen_with_coins(std::span<const FieldElement> secret, std::span<const FieldElement> coins) const;

  // Shares a message of k*s elements as k independent blocks; block j draws its
  // coins from rng.stream(j). Each share value then holds k elements.
  ShareVector share_blocks(std::span<const FieldElement> message, const SeededRng& rng) const;
  ShareVector share_blocks_with_coins(std::span<const FieldElement> message,
                                      std::span<const std::vector<FieldElement>> coins_per_block) const;

  // Recovers the (blockwise concatenated) secret. Throws std::invalid_argument
  // on fewer than tau2 shares, duplicate or out-of-range indices, or
  // inconsistent shares.
  std::vector<FieldElement> reconstruct(const ShareVector& subset) const;

  // Exact joint distributions of the coalition's shares under two secrets,
  // by enumerating every coin choice. Throws if q^coins exceeds 10^7.
  DistributionComparison leakage_probe(const std::set<std::size_t>& coalition, std::span<const FieldElement> first,
                                       std::span<const FieldElement> second) const;

 private:
  RampScheme(Kind kind, RampParams params, std::optional<LinearCode> code)
      : kind_(kind), params_(params), code_(std::move(code)) {}

  std::vector<FieldElement> share_values(std::span<const FieldElement> secret, std::span<const FieldElement> coins) const;
  std::vector<FieldElement> reconstruct_block(const ShareVector& subset, std::size_t block) const;
  void check_secret(std::span<const FieldElement> secret) const;

  Kind kind_;
  RampParams params_;
  std::optional<LinearCode> code_;
};

}  // namespace mpor
