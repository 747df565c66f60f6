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

#include "scenario.hpp"

#include <fstream>
#include <stdexcept>

#include "mpor/indexed_code_por.hpp"
#include "mpor/linear_code.hpp"
#include "mpor/shacham_waters.hpp"

namespace mpor::cli {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("scenario is missing '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

LinearCode build_code(const Json& code, FieldModulus q) {
  if (code.contains("generator")) {
    Matrix g;
    for (const auto& row : code.at("generator")) g.push_back(elements_from_json(row, q));
    return LinearCode::from_generator(std::move(g), q);
  }
  if (code.contains("reed_solomon")) {
    const Json& rs = code.at("reed_solomon");
    return LinearCode::reed_solomon(q, as_size(require(rs, "n"), "n"), as_size(require(rs, "k"), "k"));
  }
  if (code.contains("identity")) return LinearCode::identity(q, as_size(code.at("identity"), "identity"));
  throw std::invalid_argument("code needs one of 'generator', 'reed_solomon' or 'identity'");
}

}  // namespace

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("scenario must be a JSON object");
  Scenario sc;
  sc.kind = parse_mpor_kind(require(j, "kind").get<std::string>());
  sc.q = FieldModulus(as_size(require(j, "q"), "q"));
  sc.base = require(j, "base");
  if (!j.contains("seed")) throw std::invalid_argument("scenario needs a seed");
  sc.seed = require(j, "seed").get<std::uint64_t>();

  const Json& ramp = require(j, "ramp");
  if (sc.kind == MporKind::Rep) {
    sc.ramp = {0, 1, as_size(require(ramp, "rho"), "rho"), 1, sc.q};
  } else {
    sc.ramp = ramp_params_from_json(ramp, sc.q);
    sc.ramp.s = sc.ramp.tau2 > sc.ramp.tau1 ? sc.ramp.tau2 - sc.ramp.tau1 : 1;
  }

  if (j.contains("message")) sc.message = elements_from_json(j.at("message"), sc.q);
  if (j.contains("coins")) {
    std::vector<std::vector<FieldElement>> coins;
    for (const auto& row : j.at("coins")) coins.push_back(elements_from_json(row, sc.q));
    sc.coins = std::move(coins);
  }
  if (j.contains("adversaries")) {
    for (const auto& [key, spec] : j.at("adversaries").items()) {
      sc.adversaries[std::stoul(key)] = corruption_spec_from_json(spec);
    }
  }
  if (j.contains("redistribute")) {
    for (const auto& [key, blocks] : j.at("redistribute").items()) {
      auto& dropped = sc.redistribution.dropped[std::stoul(key)];
      for (const auto& b : blocks) dropped.insert(as_size(b, "block"));
    }
  }
  if (j.contains("audits_per_prover")) sc.audits_per_prover = as_size(j.at("audits_per_prover"), "audits_per_prover");
  if (j.contains("eta")) sc.eta = j.at("eta").get<double>();
  if (j.contains("alpha")) sc.alpha = j.at("alpha").get<double>();
  if (j.contains("extract")) {
    const Json& e = j.at("extract");
    if (e.contains("mode")) {
      const auto mode = e.at("mode").get<std::string>();
      if (mode == "worst-case") {
        sc.extract_mode = ExtractionMode::WorstCase;
      } else if (mode == "average-case") {
        sc.extract_mode = ExtractionMode::AverageCase;
      } else {
        throw std::invalid_argument("extract mode must be worst-case or average-case");
      }
    }
    if (e.contains("subset")) {
      for (const auto& i : e.at("subset")) sc.subset.push_back(as_size(i, "subset entry"));
    }
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed scenario " + path.string() + ": " + e.what());
  }
  return parse_scenario(j);
}

std::shared_ptr<const PorScheme> build_base(const Json& base, FieldModulus q) {
  const auto por = require(base, "por").get<std::string>();
  LinearCode code = build_code(require(base, "code"), q);
  if (por == "indexed") return std::make_shared<IndexedCodePor>(std::move(code));
  if (por == "sw") return std::make_shared<ShachamWatersPor>(std::move(code), as_size(require(base, "ell"), "ell"));
  throw std::invalid_argument("base por must be 'indexed' or 'sw'");
}

MporSystem build_system(const Scenario& sc) {
  RampScheme ramp = sc.kind == MporKind::Rep ? RampScheme::replication(sc.ramp.rho, sc.q)
                                             : RampScheme::reed_solomon(sc.ramp.tau1, sc.ramp.tau2, sc.ramp.rho, sc.q);
  return MporSystem(sc.kind, std::move(ramp), build_base(sc.base, sc.q));
}

std::vector<FieldElement> scenario_message(const Scenario& sc, const MporSystem& system) {
  if (sc.message) return *sc.message;
  SeededRng rng = SeededRng(sc.seed).stream(3);
  std::vector<FieldElement> m;
  for (std::size_t i = 0; i < system.message_length(); ++i) m.push_back(rng.element(sc.q));
  return m;
}

SetupCoins scenario_coins(const Scenario& sc, const MporSystem& system) {
  SetupCoins coins = system.draw_coins(SeededRng(sc.seed));
  if (sc.coins) coins.ramp = *sc.coins;
  return coins;
}

std::map<std::size_t, ProvingAlgorithm> build_provers(const Scenario& sc, const MporSystem& system,
                                                      std::vector<ProverState> states) {
  ProverPool pool(std::move(states));
  if (!sc.redistribution.dropped.empty()) pool.redistribute(sc.redistribution);
  bool targeted = false;
  for (const auto& [i, spec] : sc.adversaries) {
    if (i < 1 || i > system.rho()) throw std::invalid_argument("adversary names unknown prover " + std::to_string(i));
    targeted = targeted || spec.mode == CorruptionMode::TargetedK;
  }
  return pool.freeze(system.base(), sc.adversaries, targeted ? &system.response_code() : nullptr);
}

}  // namespace mpor::cli
