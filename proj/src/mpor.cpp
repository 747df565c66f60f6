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

#include "mpor/mpor.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "mpor/polynomial.hpp"

namespace mpor {

std::string to_string(MporKind kind) {
  switch (kind) {
    case MporKind::Ramp: return "ramp";
    case MporKind::Rep: return "rep";
    case MporKind::Basic: return "basic";
    case MporKind::Sw: return "sw";
  }
  return "unknown";
}

MporKind parse_mpor_kind(const std::string& name) {
  if (name == "ramp") return MporKind::Ramp;
  if (name == "rep") return MporKind::Rep;
  if (name == "basic") return MporKind::Basic;
  if (name == "sw") return MporKind::Sw;
  throw std::invalid_argument("unknown scheme kind '" + name + "' (expected ramp, rep, basic or sw)");
}

std::string to_string(ExtractionMode mode) {
  return mode == ExtractionMode::WorstCase ? "worst-case" : "average-case";
}

std::size_t VerifierState::key_material_size() const {
  std::size_t total = 0;
  for (const auto& f : fingerprints) total += f.size();
  for (const auto& k : keys) total += 1 + k.b.size();
  for (const auto& p : key_polynomials) total += p.size();
  return total;
}

MporSystem::MporSystem(MporKind kind, RampScheme ramp, std::shared_ptr<const PorScheme> base)
    : kind_(kind), ramp_(std::move(ramp)), base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("missing base PoR scheme");
  const RampParams& p = ramp_.params();
  if (p.modulus != base_->field()) throw std::invalid_argument("ramp scheme and base PoR use different fields");
  const bool sw_base = dynamic_cast<const ShachamWatersPor*>(base_.get()) != nullptr;
  switch (kind_) {
    case MporKind::Ramp:
      if (base_->keyed()) throw std::invalid_argument("ramp kind needs an unkeyed base PoR (use basic or sw)");
      break;
    case MporKind::Rep:
      if (p.tau1 != 0 || p.tau2 != 1 || p.s != 1) throw std::invalid_argument("rep kind needs the (0, 1, rho) scheme");
      if (base_->keyed() && !sw_base) throw std::invalid_argument("keyed rep needs a Shacham-Waters base");
      break;
    case MporKind::Basic:
    case MporKind::Sw:
      if (!sw_base) throw std::invalid_argument(to_string(kind_) + " kind needs a Shacham-Waters base");
      break;
  }
  if (kind_ == MporKind::Sw) {
    if (p.tau1 < 1) throw std::invalid_argument("sw kind needs tau1 >= 1");
    if (p.modulus.value() <= p.rho) throw std::invalid_argument("q > rho required");
  }
}

const ResponseCode& MporSystem::response_code() const {
  // Built on first use; large keyed instances never need it for setup or audit.
  if (!code_) code_ = std::make_shared<const ResponseCode>(build_response_code(*base_));
  return *code_;
}

void MporSystem::check_index(std::size_t index) const {
  if (index < 1 || index > rho()) throw std::invalid_argument("unknown prover index " + std::to_string(index));
}

SetupCoins MporSystem::draw_coins(const SeededRng& rng) const {
  const FieldModulus m = base_->field();
  SetupCoins coins;
  const SeededRng sharing = rng.stream(0);
  for (std::size_t j = 0; j < base_->message_length(); ++j) {
    SeededRng block = sharing.stream(j);
    coins.ramp.push_back(random_coefficients(ramp_.coin_count(), m, block));
  }
  SeededRng keys = rng.stream(1);
  const std::size_t n = base_->block_count();
  if (kind_ == MporKind::Basic) {
    for (std::size_t i = 0; i < rho(); ++i) coins.keys.push_back(sw_keygen(n, m, keys));
  } else if (kind_ == MporKind::Rep && base_->keyed()) {
    coins.keys.push_back(sw_keygen(n, m, keys));
  } else if (kind_ == MporKind::Sw) {
    for (std::size_t j = 0; j <= n; ++j) coins.key_polynomials.push_back(random_coefficients(ramp_.params().tau1, m, keys));
  }
  return coins;
}

SetupResult MporSystem::setup(std::span<const FieldElement> message, const SeededRng& rng) const {
  return setup_with_coins(message, draw_coins(rng));
}

SetupResult MporSystem::setup_with_coins(std::span<const FieldElement> message, const SetupCoins& coins) const {
  if (message.size() != message_length()) {
    throw std::invalid_argument("message must have " + std::to_string(message_length()) + " elements");
  }
  const std::size_t n = base_->block_count();
  SetupResult out;
  out.verifier.kind = kind_;
  switch (kind_) {
    case MporKind::Basic:
      if (coins.keys.size() != rho()) throw std::invalid_argument("basic kind needs rho keys");
      out.verifier.keys = coins.keys;
      break;
    case MporKind::Rep:
      if (base_->keyed()) {
        if (coins.keys.size() != 1) throw std::invalid_argument("keyed rep needs exactly one key");
        out.verifier.keys = coins.keys;
      }
      break;
    case MporKind::Sw:
      if (coins.key_polynomials.size() != n + 1) throw std::invalid_argument("sw kind needs n + 1 key polynomials");
      for (const auto& row : coins.key_polynomials) {
        if (row.size() != ramp_.params().tau1) throw std::invalid_argument("key polynomials need tau1 coefficients");
      }
      out.verifier.key_polynomials = coins.key_polynomials;
      break;
    case MporKind::Ramp:
      break;
  }
  for (const auto& key : out.verifier.keys) {
    if (key.b.size() != n) throw std::invalid_argument("key length does not match block count");
  }

  const ShareVector shares = ramp_.share_blocks_with_coins(message, coins.ramp);
  for (const Share& share : shares.shares) {
    ProverState state{share.index, share.value, {base_->encode(share.value), {}}};
    if (base_->keyed()) {
      const SwKey key = std::get<SwKey>(fingerprint(out.verifier, share.index));
      state.data.tags = sw_tag(key, state.data.blocks);
    } else {
      out.verifier.fingerprints.push_back(state.data.blocks);
    }
    out.provers.push_back(std::move(state));
  }
  return out;
}

Fingerprint MporSystem::fingerprint(const VerifierState& verifier, std::size_t index) const {
  check_index(index);
  if (!base_->keyed()) return verifier.fingerprints.at(index - 1);
  switch (kind_) {
    case MporKind::Basic: return verifier.keys.at(index - 1);
    case MporKind::Rep: return verifier.keys.at(0);
    case MporKind::Sw: {
      const std::size_t i[] = {index};
      return derive_keys(verifier, i).front();
    }
    case MporKind::Ramp: break;
  }
  throw std::logic_error("no fingerprint for this kind");
}

Acceptor MporSystem::acceptor(const VerifierState& verifier, std::size_t index) const {
  return make_acceptor(*base_, fingerprint(verifier, index));
}

std::vector<SwKey> sw_derive_keys(const std::vector<std::vector<FieldElement>>& key_polynomials,
                                  std::span<const std::size_t> indices, FieldModulus modulus) {
  if (key_polynomials.size() < 2) throw std::invalid_argument("need key polynomials f_1..f_n and g");
  std::vector<Polynomial> polys;
  for (const auto& row : key_polynomials) polys.emplace_back(row, modulus);
  std::vector<SwKey> keys;
  for (auto index : indices) {
    if (index == 0 || index >= modulus.value()) throw std::invalid_argument("key index must lie in [1, q)");
    const FieldElement x(index, modulus);
    SwKey key{poly_eval(polys.back(), x), {}};
    for (std::size_t j = 0; j + 1 < polys.size(); ++j) key.b.push_back(poly_eval(polys[j], x));
    keys.push_back(std::move(key));
  }
  return keys;
}

std::vector<SwKey> MporSystem::derive_keys(const VerifierState& verifier, std::span<const std::size_t> indices) const {
  if (kind_ != MporKind::Sw) throw std::invalid_argument("key derivation applies to the sw kind only");
  if (verifier.key_polynomials.size() != base_->block_count() + 1) {
    throw std::invalid_argument("verifier holds the wrong number of key polynomials");
  }
  for (auto index : indices) check_index(index);
  return sw_derive_keys(verifier.key_polynomials, indices, base_->field());
}

bool MporSystem::audit(const VerifierState& verifier, std::size_t index, const ProvingAlgorithm& prover, Challenge c,
                       AuditTranscript* transcript) const {
  check_index(index);
  base_->check_challenge(c);
  const Response& response = prover.respond(c);
  const bool accepted = base_->verify(fingerprint(verifier, index), c, response);
  if (transcript != nullptr) transcript->push_back({index, c, response, accepted});
  return accepted;
}

std::vector<ProverSuccess> MporSystem::measure(const VerifierState& verifier,
                                               const std::map<std::size_t, ProvingAlgorithm>& provers,
                                               std::span<const std::size_t> indices, const Rational& threshold) const {
  std::vector<ProverSuccess> out;
  for (auto i : indices) {
    const Rational succ = measure_success(provers.at(i), acceptor(verifier, i));
    out.push_back({i, succ, succ >= threshold});
  }
  return out;
}

ExtractionReport MporSystem::extract_worst_case(const VerifierState& verifier,
                                                const std::map<std::size_t, ProvingAlgorithm>& provers,
                                                std::span<const std::size_t> subset) const {
  const std::size_t tau2 = ramp_.params().tau2;
  if (subset.size() != tau2) {
    throw std::invalid_argument("worst-case extraction needs exactly tau2 = " + std::to_string(tau2) + " provers");
  }
  if (std::set<std::size_t>(subset.begin(), subset.end()).size() != subset.size()) {
    throw std::invalid_argument("extraction subset has duplicate provers");
  }
  for (auto i : subset) {
    check_index(i);
    if (!provers.contains(i)) throw std::invalid_argument("no proving algorithm for prover " + std::to_string(i));
  }

  const ResponseCode& code = response_code();
  ExtractionReport report;
  report.mode = ExtractionMode::WorstCase;
  report.subset.assign(subset.begin(), subset.end());
  report.threshold = base_->extraction_threshold(code);
  report.succ = measure(verifier, provers, subset, report.threshold);
  report.guaranteed = std::all_of(report.succ.begin(), report.succ.end(), [](const auto& s) { return s.meets_threshold; });

  ShareVector shares{ramp_.params(), {}};
  for (auto i : subset) shares.shares.push_back({i, extract_nearest(*base_, code, provers.at(i)).message});
  try {
    report.recovered = ramp_.reconstruct(shares);
  } catch (const std::invalid_argument& e) {
    report.failure = e.what();
  }
  return report;
}

ExtractionReport MporSystem::extract_average(const VerifierState& verifier,
                                             const std::map<std::size_t, ProvingAlgorithm>& provers) const {
  if (kind_ != MporKind::Rep) throw std::invalid_argument("average-case extraction applies to the rep kind only");
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= rho(); ++i) {
    if (!provers.contains(i)) throw std::invalid_argument("average-case extraction needs all rho provers");
    all.push_back(i);
  }

  const ResponseCode& code = response_code();
  ExtractionReport report;
  report.mode = ExtractionMode::AverageCase;
  report.subset = all;
  report.threshold = base_->extraction_threshold(code);
  report.succ = measure(verifier, provers, all, report.threshold);
  Rational mean = 0;
  for (const auto& s : report.succ) mean += s.succ;
  mean /= Rational(rho());
  report.guaranteed = mean >= report.threshold;

  // Concatenated received word R = R_1 || ... || R_rho against (r, ..., r).
  std::vector<std::vector<Response>> observed;
  for (auto i : all) {
    const auto& prover = provers.at(i);
    if (prover.challenge_count() != code.challenge_count()) {
      throw std::invalid_argument("prover table does not cover the challenge space");
    }
    std::vector<Response> r;
    for (Challenge c = 0; c < prover.challenge_count(); ++c) r.push_back(base_->project(prover.respond(c)));
    observed.push_back(std::move(r));
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_rank = 0;
  for (std::uint64_t rank = 0; rank < code.codeword_count(); ++rank) {
    std::size_t d = 0;
    for (const auto& r : observed) d += response_distance(r, code.codeword(rank));
    if (d < best) {
      best = d;
      best_rank = rank;
    }
  }
  const auto& share = code.message(best_rank);
  ShareVector shares{ramp_.params(), {{1, share}}};
  report.recovered = ramp_.reconstruct(shares);
  return report;
}

StorageAccounting MporSystem::storage_accounting(const VerifierState& verifier) const {
  const std::size_t n = base_->block_count();
  return {verifier.key_material_size(), base_->keyed() ? 2 * n : n};
}

}  // namespace mpor
