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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mpor/mpor.hpp"
#include "mpor/por.hpp"

namespace mpor {

enum class CorruptionMode { Honest, RandomK, TargetedK, DeleteBlocks };

std::string to_string(CorruptionMode mode);
CorruptionMode parse_corruption_mode(const std::string& name);

// How one prover departs from the honest response table. Block indices are
// 0-based, like challenges.
struct CorruptionSpec {
  CorruptionMode mode = CorruptionMode::Honest;
  std::uint64_t k = 0;             // RandomK, TargetedK
  std::set<std::size_t> blocks;    // DeleteBlocks
  std::uint64_t seed = 0;          // RandomK

  friend bool operator==(const CorruptionSpec&, const CorruptionSpec&) = default;
};

// Builds and freezes a proving algorithm.
//   Honest       exact response table.
//   RandomK      k distinct challenges, chosen uniformly, answer a uniformly
//                random wrong response. Keyed schemes keep mu and replace
//                sigma, so the entry is rejected under every key.
//   TargetedK    the first k challenges (in order) where the honest code symbol
//                differs from the nearest other codeword take that codeword's
//                symbol; sigma is kept. Stops early once the table matches it.
//   DeleteBlocks responses computed from the blocks with the listed ones zeroed;
//                tags untouched.
// `code` is needed for TargetedK only. Throws std::invalid_argument if k > gamma
// or a block index is out of range.
ProvingAlgorithm make_prover(const ProverData& data, const CorruptionSpec& spec, const PorScheme& scheme,
                             const ResponseCode* code = nullptr);

// Pre-freeze collusion: each listed prover drops (zeroes) the given blocks.
// Every block must still be held by at least one prover.
struct RedistributionPlan {
  std::map<std::size_t, std::set<std::size_t>> dropped;  // prover index -> blocks
};

std::vector<ProverState> collude_redistribute(std::vector<ProverState> states, const RedistributionPlan& plan);

// Prover states up to the moment proving algorithms are fixed.
class ProverPool {
 public:
  explicit ProverPool(std::vector<ProverState> states) : states_(std::move(states)) {}

  const std::vector<ProverState>& states() const noexcept { return states_; }
  bool frozen() const noexcept { return frozen_; }

  // Throws std::logic_error once frozen.
  void redistribute(const RedistributionPlan& plan);

  // Builds every prover's table (Honest where no spec is given) and forbids
  // further redistribution. Throws std::logic_error if already frozen.
  std::map<std::size_t, ProvingAlgorithm> freeze(const PorScheme& scheme,
                                                 const std::map<std::size_t, CorruptionSpec>& specs,
                                                 const ResponseCode* code = nullptr);

 private:
  std::vector<ProverState> states_;
  bool frozen_ = false;
};

}  // namespace mpor
