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

#include "mpor/por.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "mpor/linear_code.hpp"

namespace mpor {

std::optional<std::uint64_t> PorScheme::encoded_count() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < message_length(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / field().value()) return std::nullopt;
    total *= field().value();
  }
  return total;
}

std::vector<FieldElement> PorScheme::message_at(std::uint64_t rank) const {
  return message_at_rank(rank, message_length(), field());
}

Rational PorScheme::extraction_threshold(const ResponseCode& code) const {
  return Rational(1) - Rational(code.distance()) / Rational(2 * code.challenge_count());
}

void PorScheme::check_challenge(Challenge c) const {
  if (c >= challenge_count()) throw std::invalid_argument("challenge " + std::to_string(c) + " outside challenge space");
}

std::span<const Response> ResponseCode::codeword(std::uint64_t rank) const {
  if (rank >= messages_.size()) throw std::out_of_range("codeword rank out of range");
  return std::span<const Response>(symbols_).subspan(rank * gamma_, gamma_);
}

ResponseCode build_response_code(const PorScheme& scheme) {
  const auto count = scheme.encoded_count();
  const std::uint64_t gamma = scheme.challenge_count();
  if (!count || (gamma > 0 && *count > ResponseCode::kMaxEntries / gamma)) {
    throw std::invalid_argument("response code too large to materialize");
  }
  if (*count < 2) throw std::invalid_argument("response code distance undefined for fewer than two codewords");

  ResponseCode code;
  code.gamma_ = gamma;
  code.messages_.reserve(*count);
  code.symbols_.reserve(*count * gamma);
  for (std::uint64_t rank = 0; rank < *count; ++rank) {
    auto message = scheme.message_at(rank);
    const Blocks blocks = scheme.encode(message);
    for (Challenge c = 0; c < gamma; ++c) code.symbols_.push_back(scheme.code_symbol(blocks, c));
    code.messages_.push_back(std::move(message));
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t i = 0; i < *count; ++i) {
    for (std::uint64_t j = i + 1; j < *count; ++j) {
      best = std::min(best, response_distance(code.codeword(i), code.codeword(j)));
    }
  }
  code.distance_ = best;
  return code;
}

std::size_t response_distance(std::span<const Response> a, std::span<const Response> b) {
  if (a.size() != b.size()) throw std::invalid_argument("response vectors have different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] == b[i] ? 0 : 1;
  return d;
}

void ProvingAlgorithm::set_response(Challenge c, Response r) {
  if (frozen_) throw std::logic_error("proving algorithm is frozen");
  table_.at(c) = std::move(r);
}

Acceptor make_acceptor(const PorScheme& scheme, Fingerprint fingerprint) {
  return [&scheme, fp = std::move(fingerprint)](Challenge c, const Response& r) { return scheme.verify(fp, c, r); };
}

Rational measure_success(const ProvingAlgorithm& prover, const Acceptor& accept) {
  if (prover.challenge_count() == 0) throw std::invalid_argument("empty challenge space");
  std::uint64_t accepted = 0;
  for (Challenge c = 0; c < prover.challenge_count(); ++c) accepted += accept(c, prover.respond(c)) ? 1 : 0;
  return Rational(accepted) / Rational(prover.challenge_count());
}

Rational measure_success_avg(const ProvingAlgorithm& prover, std::span<const Acceptor> accepts) {
  if (accepts.empty()) throw std::invalid_argument("no keys supplied");
  Rational total = 0;
  for (const auto& accept : accepts) total += measure_success(prover, accept);
  return total / Rational(accepts.size());
}

NearestResult extract_nearest(const PorScheme& scheme, const ResponseCode& code, const ProvingAlgorithm& prover) {
  if (prover.challenge_count() != code.challenge_count()) {
    throw std::invalid_argument("prover table does not cover the challenge space");
  }
  std::vector<Response> observed;
  observed.reserve(prover.challenge_count());
  for (Challenge c = 0; c < prover.challenge_count(); ++c) observed.push_back(scheme.project(prover.respond(c)));

  NearestResult best{{}, 0, std::numeric_limits<std::size_t>::max()};
  for (std::uint64_t rank = 0; rank < code.codeword_count(); ++rank) {
    const std::size_t d = response_distance(observed, code.codeword(rank));
    if (d < best.distance) best = {code.message(rank), rank, d};  // strict: lowest rank wins ties
  }
  return best;
}

NearestResult extract_nearest(const PorScheme& scheme, const ProvingAlgorithm& prover) {
  return extract_nearest(scheme, build_response_code(scheme), prover);
}

ProvingAlgorithm honest_prover(const PorScheme& scheme, const ProverData& data) {
  std::vector<Response> table;
  table.reserve(scheme.challenge_count());
  for (Challenge c = 0; c < scheme.challenge_count(); ++c) table.push_back(scheme.respond(data, c));
  ProvingAlgorithm prover(std::move(table));
  prover.freeze();
  return prover;
}

}  // namespace mpor
