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
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "mpor/adversary.hpp"
#include "mpor/mpor.hpp"
#include "mpor/serialize.hpp"

namespace mpor::cli {

// A simulation scenario. See README for the file format.
struct Scenario {
  MporKind kind = MporKind::Ramp;
  FieldModulus q{2};
  Json base;
  RampParams ramp;
  std::optional<std::vector<FieldElement>> message;       // random when absent
  std::optional<std::vector<std::vector<FieldElement>>> coins;  // ramp coins per block
  std::map<std::size_t, CorruptionSpec> adversaries;
  RedistributionPlan redistribution;
  std::uint64_t audits_per_prover = 0;
  double eta = 0.9;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  ExtractionMode extract_mode = ExtractionMode::WorstCase;
  std::vector<std::size_t> subset;
};

Scenario parse_scenario(const Json& j);
Scenario load_scenario(const std::filesystem::path& path);

std::shared_ptr<const PorScheme> build_base(const Json& base, FieldModulus q);
MporSystem build_system(const Scenario& sc);

// The scenario message, or one drawn from the seed.
std::vector<FieldElement> scenario_message(const Scenario& sc, const MporSystem& system);
SetupCoins scenario_coins(const Scenario& sc, const MporSystem& system);

// Applies redistribution, then builds and freezes every prover's table.
std::map<std::size_t, ProvingAlgorithm> build_provers(const Scenario& sc, const MporSystem& system,
                                                      std::vector<ProverState> states);

}  // namespace mpor::cli
