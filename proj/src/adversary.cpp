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

#include "mpor/adversary.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "mpor/rng.hpp"

namespace mpor {

std::string to_string(CorruptionMode mode) {
  switch (mode) {
    case CorruptionMode::Honest: return "honest";
    case CorruptionMode::RandomK: return "random_k";
    case CorruptionMode::TargetedK: return "targeted_k";
    case CorruptionMode::DeleteBlocks: return "delete_blocks";
  }
  return "unknown";
}

CorruptionMode parse_corruption_mode(const std::string& name) {
  if (name == "honest") return CorruptionMode::Honest;
  if (name == "random_k") return CorruptionMode::RandomK;
  if (name == "targeted_k") return CorruptionMode::TargetedK;
  if (name == "delete_blocks") return CorruptionMode::DeleteBlocks;
  throw std::invalid_argument("unknown adversary mode '" + name + "'");
}

namespace {

Response random_wrong(const Response& honest, const PorScheme& scheme, SeededRng& rng) {
  const FieldModulus m = scheme.field();
  Response r = honest;
  // Keyed: only sigma changes, which no key accepts.
  const std::size_t from = scheme.keyed() ? r.size() - 1 : 0;
  do {
    for (std::size_t i = from; i < r.size(); ++i) r[i] = rng.element(m);
  } while (r == honest);
  return r;
}

void check_blocks(const std::set<std::size_t>& blocks, std::size_t n) {
  for (auto b : blocks) {
    if (b >= n) throw std::invalid_argument("block index " + std::to_string(b) + " out of range");
  }
}

}  // namespace

ProvingAlgorithm make_prover(const ProverData& data, const CorruptionSpec& spec, const PorScheme& scheme,
                             const ResponseCode* code) {
  const std::uint64_t gamma = scheme.challenge_count();
  if (spec.k > gamma) throw std::invalid_argument("corruption count k exceeds the challenge space");

  ProvingAlgorithm honest = honest_prover(scheme, data);
  std::vector<Response> table = honest.table();

  switch (spec.mode) {
    case CorruptionMode::Honest:
      break;
    case CorruptionMode::RandomK: {
      SeededRng rng(spec.seed);
      std::vector<Challenge> order(gamma);
      std::iota(order.begin(), order.end(), Challenge{0});
      for (std::uint64_t i = 0; i < spec.k; ++i) {
        std::swap(order[i], order[i + rng.uniform(gamma - i)]);
        table[order[i]] = random_wrong(table[order[i]], scheme, rng);
      }
      break;
    }
    case CorruptionMode::TargetedK: {
      if (code == nullptr) throw std::invalid_argument("targeted corruption needs the response code");
      std::vector<Response> own;
      for (Challenge c = 0; c < gamma; ++c) own.push_back(scheme.code_symbol(data.blocks, c));
      std::uint64_t target = 0;
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (std::uint64_t rank = 0; rank < code->codeword_count(); ++rank) {
        const std::size_t d = response_distance(own, code->codeword(rank));
        if (d > 0 && d < best) {
          best = d;
          target = rank;
        }
      }
      std::uint64_t moved = 0;
      for (Challenge c = 0; c < gamma && moved < spec.k; ++c) {
        const Response& sym = code->symbol(target, c);
        if (sym == own[c]) continue;
        std::copy(sym.begin(), sym.end(), table[c].begin());
        ++moved;
      }
      break;
    }
    case CorruptionMode::DeleteBlocks: {
      check_blocks(spec.blocks, data.blocks.size());
      ProverData damaged = data;
      for (auto b : spec.blocks) damaged.blocks[b] = FieldElement::zero(scheme.field());
      table = honest_prover(scheme, damaged).table();
      break;
    }
  }
  ProvingAlgorithm prover(std::move(table));
  prover.freeze();
  return prover;
}

std::vector<ProverState> collude_redistribute(std::vector<ProverState> states, const RedistributionPlan& plan) {
  if (states.empty()) return states;
  const std::size_t n = states.front().data.blocks.size();
  std::vector<bool> kept(n, false);
  for (const auto& s : states) {
    const auto it = plan.dropped.find(s.index);
    for (std::size_t b = 0; b < n; ++b) {
      if (it == plan.dropped.end() || !it->second.contains(b)) kept[b] = true;
    }
  }
  for (const auto& [index, blocks] : plan.dropped) {
    bool found = false;
    for (const auto& s : states) found = found || s.index == index;
    if (!found) throw std::invalid_argument("redistribution names unknown prover " + std::to_string(index));
    check_blocks(blocks, n);
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (!kept[b]) throw std::invalid_argument("block " + std::to_string(b) + " would be held by no prover");
  }
  for (auto& s : states) {
    const auto it = plan.dropped.find(s.index);
    if (it == plan.dropped.end()) continue;
    for (auto b : it->second) s.data.blocks[b] = FieldElement::zero(s.data.blocks[b].modulus());
  }
  return states;
}

void ProverPool::redistribute(const RedistributionPlan& plan) {
  if (frozen_) throw std::logic_error("provers may not redistribute after proving algorithms are fixed");
  states_ = collude_redistribute(states_, plan);
}

std::map<std::size_t, ProvingAlgorithm> ProverPool::freeze(const PorScheme& scheme,
                                                           const std::map<std::size_t, CorruptionSpec>& specs,
                                                           const ResponseCode* code) {
  if (frozen_) throw std::logic_error("prover pool already frozen");
  std::map<std::size_t, ProvingAlgorithm> out;
  for (const auto& s : states_) {
    const auto it = specs.find(s.index);
    out.emplace(s.index, make_prover(s.data, it == specs.end() ? CorruptionSpec{} : it->second, scheme, code));
  }
  frozen_ = true;
  return out;
}

}  // namespace mpor
