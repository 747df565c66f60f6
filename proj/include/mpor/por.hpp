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
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mpor/field.hpp"
#include "mpor/rational.hpp"

namespace mpor {

using Challenge = std::uint64_t;  // index into the enumerated challenge space
using Response = std::vector<FieldElement>;
using Blocks = std::vector<FieldElement>;

// Shacham-Waters key K = (a, b_1..b_n).
struct SwKey {
  FieldElement a;
  std::vector<FieldElement> b;

  friend bool operator==(const SwKey&, const SwKey&) = default;
};

// What a prover is given: encoded blocks M and, for keyed schemes, tags S.
struct ProverData {
  Blocks blocks;
  Blocks tags;

  friend bool operator==(const ProverData&, const ProverData&) = default;
};

// What the verifier keeps to check one prover: a copy of the encoded blocks
// for unkeyed schemes, the key for keyed ones.
using Fingerprint = std::variant<Blocks, SwKey>;

class ResponseCode;

// Single-prover PoR: message space F_q^k, encoding e into n blocks, an
// enumerated challenge space of size gamma and a deterministic response
// function. The response code is taken over code symbols, which for keyed
// schemes drop the key-dependent part of a response.
class PorScheme {
 public:
  virtual ~PorScheme() = default;

  virtual const FieldModulus& field() const = 0;
  virtual std::size_t message_length() const = 0;
  virtual std::size_t block_count() const = 0;
  virtual std::uint64_t challenge_count() const = 0;
  // Number of field elements in one full response.
  virtual std::size_t response_width() const = 0;
  virtual bool keyed() const = 0;

  virtual Blocks encode(std::span<const FieldElement> message) const = 0;
  virtual std::vector<FieldElement> decode(std::span<const FieldElement> blocks) const = 0;

  // Size of the encoded message space and its enumeration in lexicographic
  // message order. Defaults enumerate F_q^k.
  virtual std::optional<std::uint64_t> encoded_count() const;
  virtual std::vector<FieldElement> message_at(std::uint64_t rank) const;

  virtual Response respond(const ProverData& data, Challenge c) const = 0;
  virtual Response code_symbol(std::span<const FieldElement> blocks, Challenge c) const = 0;
  virtual Response project(const Response& r) const { return r; }
  virtual bool verify(const Fingerprint& fingerprint, Challenge c, const Response& r) const = 0;

  // Success fraction above which extraction is guaranteed.
  virtual Rational extraction_threshold(const ResponseCode& code) const;

  void check_challenge(Challenge c) const;
};

// Full table of response vectors r^M (code symbols) for every encoded message,
// with the exact minimum pairwise Hamming distance.
class ResponseCode {
 public:
  static constexpr std::uint64_t kMaxEntries = 10'000'000;

  std::uint64_t codeword_count() const noexcept { return messages_.size(); }
  std::uint64_t challenge_count() const noexcept { return gamma_; }
  std::size_t distance() const noexcept { return distance_; }
  const std::vector<FieldElement>& message(std::uint64_t rank) const { return messages_.at(rank); }
  const Response& symbol(std::uint64_t rank, Challenge c) const { return symbols_.at(rank * gamma_ + c); }
  std::span<const Response> codeword(std::uint64_t rank) const;

 private:
  friend ResponseCode build_response_code(const PorScheme& scheme);

  std::uint64_t gamma_ = 0;
  std::size_t distance_ = 0;
  std::vector<std::vector<FieldElement>> messages_;
  std::vector<Response> symbols_;
};

// Throws std::invalid_argument if there are fewer than two encoded messages
// or more than kMaxEntries table entries.
ResponseCode build_response_code(const PorScheme& scheme);

// Hamming distance between two response vectors, comparing whole responses.
std::size_t response_distance(std::span<const Response> a, std::span<const Response> b);

// A prover's frozen challenge -> response behaviour.
class ProvingAlgorithm {
 public:
  explicit ProvingAlgorithm(std::vector<Response> table) : table_(std::move(table)) {}

  std::uint64_t challenge_count() const noexcept { return table_.size(); }
  const Response& respond(Challenge c) const { return table_.at(c); }
  const std::vector<Response>& table() const noexcept { return table_; }

  bool frozen() const noexcept { return frozen_; }
  void freeze() noexcept { frozen_ = true; }
  // Throws std::logic_error once frozen.
  void set_response(Challenge c, Response r);

 private:
  std::vector<Response> table_;
  bool frozen_ = false;
};

using Acceptor = std::function<bool(Challenge, const Response&)>;

Acceptor make_acceptor(const PorScheme& scheme, Fingerprint fingerprint);

// Exact accepted fraction over the whole challenge space.
Rational measure_success(const ProvingAlgorithm& prover, const Acceptor& accept);
// Average of the per-key success fractions over the supplied acceptors (succ_avg).
Rational measure_success_avg(const ProvingAlgorithm& prover, std::span<const Acceptor> accepts);

struct NearestResult {
  std::vector<FieldElement> message;
  std::uint64_t rank = 0;
  std::size_t distance = 0;
};

// Queries the prover on every challenge and returns the message whose response
// vector is nearest; ties go to the lexicographically smallest message.
NearestResult extract_nearest(const PorScheme& scheme, const ResponseCode& code, const ProvingAlgorithm& prover);
NearestResult extract_nearest(const PorScheme& scheme, const ProvingAlgorithm& prover);

// Honest prover table: respond(data, c) for every c.
ProvingAlgorithm honest_prover(const PorScheme& scheme, const ProverData& data);

}  // namespace mpor
