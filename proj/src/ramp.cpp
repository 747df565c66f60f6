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

#include "mpor/ramp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "mpor/polynomial.hpp"

namespace mpor {

namespace {

constexpr std::uint64_t kMaxCoinSpace = 10'000'000;

void check_indices(const ShareVector& v) {
  std::set<std::size_t> seen;
  for (const auto& share : v.shares) {
    if (share.index < 1 || share.index > v.params.rho) {
      throw std::invalid_argument("share index " + std::to_string(share.index) + " outside [1, rho]");
    }
    if (!seen.insert(share.index).second) {
      throw std::invalid_argument("duplicate share index " + std::to_string(share.index));
    }
  }
}

}  // namespace

void RampParams::validate() const {
  if (!(tau1 < tau2)) throw std::invalid_argument("tau1 < tau2 required");
  if (tau2 > rho) throw std::invalid_argument("tau2 <= rho required");
  if (s < 1) throw std::invalid_argument("secret length s >= 1 required");
}

const Share& ShareVector::at(std::size_t index) const {
  for (const auto& share : shares) {
    if (share.index == index) return share;
  }
  throw std::out_of_range("no share with index " + std::to_string(index));
}

ShareVector ShareVector::subset(std::span<const std::size_t> indices) const {
  ShareVector out{params, {}};
  for (auto i : indices) out.shares.push_back(at(i));
  return out;
}

RampScheme RampScheme::reed_solomon(std::size_t tau1, std::size_t tau2, std::size_t rho, FieldModulus modulus) {
  if (!(tau1 < tau2)) throw std::invalid_argument("tau1 < tau2 required");
  RampParams params{tau1, tau2, rho, tau2 - tau1, modulus};
  params.validate();
  if (modulus.value() <= rho) throw std::invalid_argument("q > rho required");
  return RampScheme(Kind::ReedSolomon, params, std::nullopt);
}

RampScheme RampScheme::replication(std::size_t rho, FieldModulus modulus) { return reed_solomon(0, 1, rho, modulus); }

RampScheme RampScheme::from_code(LinearCode code, std::size_t s, std::size_t tau1, std::size_t tau2) {
  if (s > code.dimension()) throw std::invalid_argument("secret length exceeds code dimension");
  if (code.length() <= s) throw std::invalid_argument("code too short to carry any share");
  RampParams params{tau1, tau2, code.length() - s, s, code.modulus()};
  params.validate();
  return RampScheme(Kind::LinearCode, params, std::move(code));
}

std::size_t RampScheme::coin_count() const noexcept {
  return kind_ == Kind::ReedSolomon ? params_.tau1 : code_->dimension() - params_.s;
}

void RampScheme::check_secret(std::span<const FieldElement> secret) const {
  if (secret.size() != params_.s) throw std::invalid_argument("secret length does not match s");
  for (const auto& e : secret) {
    if (e.modulus() != params_.modulus) throw std::invalid_argument("secret element has wrong modulus");
  }
}

std::vector<FieldElement> RampScheme::share_values(std::span<const FieldElement> secret,
                                                   std::span<const FieldElement> coins) const {
  check_secret(secret);
  if (coins.size() != coin_count()) throw std::invalid_argument("wrong number of coins");
  std::vector<FieldElement> info(secret.begin(), secret.end());
  info.insert(info.end(), coins.begin(), coins.end());
  std::vector<FieldElement> out;
  out.reserve(params_.rho);
  if (kind_ == Kind::ReedSolomon) {
    const Polynomial f(std::move(info), params_.modulus);
    for (std::size_t i = 1; i <= params_.rho; ++i) out.push_back(poly_eval(f, FieldElement(i, params_.modulus)));
  } else {
    const auto codeword = code_->encode(info);
    out.assign(codeword.begin() + static_cast<std::ptrdiff_t>(params_.s), codeword.end());
  }
  return out;
}

ShareVector RampScheme::share_gen_with_coins(std::span<const FieldElement> secret,
                                             std::span<const FieldElement> coins) const {
  const auto values = share_values(secret, coins);
  ShareVector out{params_, {}};
  for (std::size_t i = 0; i < values.size(); ++i) out.shares.push_back({i + 1, {values[i]}});
  return out;
}

ShareVector RampScheme::share_gen(std::span<const FieldElement> secret, SeededRng& rng) const {
  const auto coins = random_coefficients(coin_count(), params_.modulus, rng);
  return share_gen_with_coins(secret, coins);
}

ShareVector RampScheme::share_blocks_with_coins(std::span<const FieldElement> message,
                                                std::span<const std::vector<FieldElement>> coins_per_block) const {
  if (message.empty() || message.size() % params_.s != 0) {
    throw std::invalid_argument("message length must be a positive multiple of s");
  }
  const std::size_t blocks = message.size() / params_.s;
  if (coins_per_block.size() != blocks) throw std::invalid_argument("need one coin vector per block");
  ShareVector out{params_, {}};
  for (std::size_t i = 1; i <= params_.rho; ++i) out.shares.push_back({i, {}});
  for (std::size_t j = 0; j < blocks; ++j) {
    const auto values = share_values(message.subspan(j * params_.s, params_.s), coins_per_block[j]);
    for (std::size_t i = 0; i < params_.rho; ++i) out.shares[i].value.push_back(values[i]);
  }
  return out;
}

ShareVector RampScheme::share_blocks(std::span<const FieldElement> message, const SeededRng& rng) const {
  if (message.empty() || message.size() % params_.s != 0) {
    throw std::invalid_argument("message length must be a positive multiple of s");
  }
  std::vector<std::vector<FieldElement>> coins;
  for (std::size_t j = 0; j < message.size() / params_.s; ++j) {
    SeededRng block_rng = rng.stream(j);
    coins.push_back(random_coefficients(coin_count(), params_.modulus, block_rng));
  }
  return share_blocks_with_coins(message, coins);
}

std::vector<FieldElement> RampScheme::reconstruct_block(const ShareVector& subset, std::size_t block) const {
  const FieldModulus m = params_.modulus;
  if (kind_ == Kind::ReedSolomon) {
    std::vector<Point> points;
    for (const auto& share : subset.shares) points.emplace_back(FieldElement(share.index, m), share.value[block]);
    const Polynomial f = poly_interpolate(points);
    if (f.degree() >= static_cast<int>(params_.tau2)) throw std::invalid_argument("inconsistent shares");
    std::vector<FieldElement> secret;
    for (std::size_t i = 0; i < params_.s; ++i) secret.push_back(f.coefficient(i));
    return secret;
  }
  // Unknown: the information word u; share i pins codeword column s + i - 1.
  Matrix a;
  std::vector<FieldElement> b;
  for (const auto& share : subset.shares) {
    std::vector<FieldElement> row;
    for (std::size_t r = 0; r < code_->dimension(); ++r) row.push_back(code_->generator()[r][params_.s + share.index - 1]);
    a.push_back(std::move(row));
    b.push_back(share.value[block]);
  }
  const auto solution = solve_linear(a, b, m);
  if (!solution) throw std::invalid_argument("inconsistent shares");
  for (const auto& v : solution->null_basis) {
    for (std::size_t i = 0; i < params_.s; ++i) {
      if (!v[i].is_zero()) throw std::invalid_argument("insufficient shares");
    }
  }
  return {solution->particular.begin(), solution->particular.begin() + static_cast<std::ptrdiff_t>(params_.s)};
}

std::vector<FieldElement> RampScheme::reconstruct(const ShareVector& subset) const {
  if (subset.params != params_) throw std::invalid_argument("share vector belongs to a different scheme");
  check_indices(subset);
  if (subset.shares.size() < params_.tau2) throw std::invalid_argument("insufficient shares");
  const std::size_t blocks = subset.shares.front().value.size();
  for (const auto& share : subset.shares) {
    if (share.value.size() != blocks || blocks == 0) throw std::invalid_argument("shares have unequal block counts");
  }
  std::vector<FieldElement> secret;
  for (std::size_t j = 0; j < blocks; ++j) {
    const auto block = reconstruct_block(subset, j);
    secret.insert(secret.end(), block.begin(), block.end());
  }
  return secret;
}

DistributionComparison RampScheme::leakage_probe(const std::set<std::size_t>& coalition,
                                                 std::span<const FieldElement> first,
                                                 std::span<const FieldElement> second) const {
  check_secret(first);
  check_secret(second);
  for (auto i : coalition) {
    if (i < 1 || i > params_.rho) throw std::invalid_argument("coalition index outside [1, rho]");
  }
  std::uint64_t choices = 1;
  for (std::size_t i = 0; i < coin_count(); ++i) {
    choices *= params_.modulus.value();
    if (choices > kMaxCoinSpace) throw std::invalid_argument("coin space too large to enumerate");
  }
  using Histogram = std::map<std::vector<std::uint64_t>, std::uint64_t>;
  auto histogram = [&](std::span<const FieldElement> secret) {
    Histogram h;
    for (std::uint64_t rank = 0; rank < choices; ++rank) {
      const auto coins = message_at_rank(rank, coin_count(), params_.modulus);
      const auto values = share_values(secret, coins);
      std::vector<std::uint64_t> view;
      for (auto i : coalition) view.push_back(values[i - 1].value());
      ++h[view];
    }
    return h;
  };
  const Histogram a = histogram(first);
  const Histogram b = histogram(second);
  return {a == b, choices, a.size(), b.size()};
}

}  // namespace mpor
