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

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpor/por.hpp"
#include "mpor/ramp.hpp"
#include "mpor/rng.hpp"
#include "mpor/shacham_waters.hpp"

namespace mpor {

enum class MporKind {
  Ramp,   // ramp shares, each encoded by an unkeyed base PoR
  Rep,    // (0, 1, rho) replication; a keyed base uses one shared key
  Basic,  // ramp shares under Shacham-Waters with rho independent keys
  Sw,     // ramp shares under Shacham-Waters with keys derived from n+1 polynomials
};

std::string to_string(MporKind kind);
MporKind parse_mpor_kind(const std::string& name);

// The verifier's secret material.
struct VerifierState {
  MporKind kind = MporKind::Ramp;
  // Unkeyed: a copy of each prover's encoded blocks, indexed by prover - 1.
  std::vector<Blocks> fingerprints;
  // Basic: rho keys. Rep over Shacham-Waters: one key shared by all provers.
  std::vector<SwKey> keys;
  // Sw: coefficients of f_1..f_n then g, tau1 each, lowest degree first.
  std::vector<std::vector<FieldElement>> key_polynomials;

  std::size_t key_material_size() const;
};

struct ProverState {
  std::size_t index = 0;
  std::vector<FieldElement> share;  // the ramp share, one element per block
  ProverData data;

  friend bool operator==(const ProverState&, const ProverState&) = default;
};

// Explicit randomness for setup, for reproduction and exhaustive enumeration.
struct SetupCoins {
  std::vector<std::vector<FieldElement>> ramp;  // per shared block
  std::vector<SwKey> keys;                      // Basic: rho keys; keyed Rep: one
  std::vector<std::vector<FieldElement>> key_polynomials;  // Sw: n+1 rows of tau1
};

struct SetupResult {
  VerifierState verifier;
  std::vector<ProverState> provers;
};

struct AuditRecord {
  std::size_t prover = 0;
  Challenge challenge = 0;
  Response response;
  bool accepted = false;
};
using AuditTranscript = std::vector<AuditRecord>;

enum class ExtractionMode { WorstCase, AverageCase };
std::string to_string(ExtractionMode mode);

struct ProverSuccess {
  std::size_t prover = 0;
  Rational succ;
  bool meets_threshold = false;
};

struct ExtractionReport {
  ExtractionMode mode = ExtractionMode::WorstCase;
  std::optional<std::vector<FieldElement>> recovered;  // nullopt when reconstruction failed
  std::string failure;
  std::vector<std::size_t> subset;
  std::vector<ProverSuccess> succ;
  Rational threshold;
  // Every success rate meets the threshold, so `recovered` is the message.
  bool guaranteed = false;
};

struct StorageAccounting {
  std::size_t verifier_elements = 0;
  std::size_t per_prover_elements = 0;
};

// Key of prover i from the Sw key polynomials f_1..f_n, g (rows of coefficients,
// lowest degree first): K_i = (g(i), f_1(i), ..., f_n(i)). Throws if i = 0 or i >= q.
std::vector<SwKey> sw_derive_keys(const std::vector<std::vector<FieldElement>>& key_polynomials,
                                  std::span<const std::size_t> indices, FieldModulus modulus);

class MporSystem {
 public:
  // Throws std::invalid_argument when the ramp scheme or base PoR does not fit
  // the kind: Rep needs the (0,1,rho) scheme, Basic and Sw a Shacham-Waters
  // base, Ramp an unkeyed base, Sw tau1 >= 1 and q > rho.
  MporSystem(MporKind kind, RampScheme ramp, std::shared_ptr<const PorScheme> base);

  MporKind kind() const noexcept { return kind_; }
  const RampScheme& ramp() const noexcept { return ramp_; }
  const PorScheme& base() const noexcept { return *base_; }
  std::shared_ptr<const PorScheme> base_ptr() const noexcept { return base_; }
  std::size_t rho() const noexcept { return ramp_.params().rho; }
  std::size_t message_length() const noexcept { return base_->message_length() * ramp_.params().s; }
  const ResponseCode& response_code() const;

  SetupCoins draw_coins(const SeededRng& rng) const;
  SetupResult setup(std::span<const FieldElement> message, const SeededRng& rng) const;
  SetupResult setup_with_coins(std::span<const FieldElement> message, const SetupCoins& coins) const;

  // The verifier's view of prover `index`: its key or stored copy.
  Fingerprint fingerprint(const VerifierState& verifier, std::size_t index) const;
  Acceptor acceptor(const VerifierState& verifier, std::size_t index) const;

  // Evaluates the key polynomials at each index (Sw only).
  std::vector<SwKey> derive_keys(const VerifierState& verifier, std::span<const std::size_t> indices) const;

  // One challenge-response exchange; appends to the transcript when given.
  bool audit(const VerifierState& verifier, std::size_t index, const ProvingAlgorithm& prover, Challenge c,
             AuditTranscript* transcript = nullptr) const;

  // Runs the single-prover extractor on exactly tau2 provers and reconstructs.
  ExtractionReport extract_worst_case(const VerifierState& verifier,
                                      const std::map<std::size_t, ProvingAlgorithm>& provers,
                                      std::span<const std::size_t> subset) const;
  // Rep only: nearest replicated codeword to the concatenation of all rho
  // response vectors.
  ExtractionReport extract_average(const VerifierState& verifier,
                                   const std::map<std::size_t, ProvingAlgorithm>& provers) const;

  StorageAccounting storage_accounting(const VerifierState& verifier) const;

 private:
  void check_index(std::size_t index) const;
  std::vector<ProverSuccess> measure(const VerifierState& verifier,
                                     const std::map<std::size_t, ProvingAlgorithm>& provers,
                                     std::span<const std::size_t> indices, const Rational& threshold) const;

  MporKind kind_;
  RampScheme ramp_;
  std::shared_ptr<const PorScheme> base_;
  mutable std::shared_ptr<const ResponseCode> code_;
};

}  // namespace mpor
