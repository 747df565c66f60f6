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

#include "mpor/serialize.hpp"

#include <stdexcept>
#include <string>

namespace mpor {

namespace {

std::uint64_t uint_from_json(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used);
    if (used == s.size() && !s.empty() && s.front() != '-') return v;
  }
  throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json elements_to_json(std::span<const FieldElement> v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

FieldElement element_from_json(const Json& j, FieldModulus m) {
  const std::uint64_t v = uint_from_json(j, "field element");
  if (v >= m.value()) throw std::invalid_argument("field element " + std::to_string(v) + " not below q");
  return {v, m};
}

std::vector<FieldElement> elements_from_json(const Json& j, FieldModulus m) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of field elements");
  std::vector<FieldElement> out;
  for (const auto& e : j) out.push_back(element_from_json(e, m));
  return out;
}

Json to_json(const RampParams& p) {
  return {{"tau1", p.tau1}, {"tau2", p.tau2}, {"rho", p.rho}, {"s", p.s}, {"q", p.modulus.value()}};
}

RampParams ramp_params_from_json(const Json& j, FieldModulus m) {
  RampParams p;
  p.tau1 = uint_from_json(field(j, "tau1"), "tau1");
  p.tau2 = uint_from_json(field(j, "tau2"), "tau2");
  p.rho = uint_from_json(field(j, "rho"), "rho");
  p.s = j.contains("s") ? uint_from_json(j.at("s"), "s") : 1;
  p.modulus = m;
  return p;
}

Json to_json(const ShareVector& shares) {
  Json list = Json::array();
  for (const auto& s : shares.shares) list.push_back({{"index", s.index}, {"value", elements_to_json(s.value)}});
  return {{"params", to_json(shares.params)}, {"shares", list}};
}

ShareVector share_vector_from_json(const Json& j) {
  const Json& p = field(j, "params");
  const FieldModulus m(uint_from_json(field(p, "q"), "q"));
  ShareVector out{ramp_params_from_json(p, m), {}};
  for (const auto& s : field(j, "shares")) {
    out.shares.push_back({uint_from_json(field(s, "index"), "index"), elements_from_json(field(s, "value"), m)});
  }
  return out;
}

Json to_json(const SwKey& key) { return {{"a", key.a.value()}, {"b", elements_to_json(key.b)}}; }

SwKey sw_key_from_json(const Json& j, FieldModulus m) {
  return {element_from_json(field(j, "a"), m), elements_from_json(field(j, "b"), m)};
}

Json to_json(const VerifierState& v, FieldModulus m) {
  Json out = {{"kind", to_string(v.kind)}, {"q", m.value()}};
  Json fps = Json::array();
  for (const auto& f : v.fingerprints) fps.push_back(elements_to_json(f));
  Json keys = Json::array();
  for (const auto& k : v.keys) keys.push_back(to_json(k));
  Json polys = Json::array();
  for (const auto& p : v.key_polynomials) polys.push_back(elements_to_json(p));
  out["fingerprints"] = fps;
  out["keys"] = keys;
  out["key_polynomials"] = polys;
  return out;
}

VerifierState verifier_from_json(const Json& j, FieldModulus m) {
  if (uint_from_json(field(j, "q"), "q") != m.value()) throw std::invalid_argument("verifier file uses another field");
  VerifierState v;
  v.kind = parse_mpor_kind(field(j, "kind").get<std::string>());
  for (const auto& f : field(j, "fingerprints")) v.fingerprints.push_back(elements_from_json(f, m));
  for (const auto& k : field(j, "keys")) v.keys.push_back(sw_key_from_json(k, m));
  for (const auto& p : field(j, "key_polynomials")) v.key_polynomials.push_back(elements_from_json(p, m));
  return v;
}

Json to_json(const ProverState& p) {
  return {{"index", p.index},
          {"share", elements_to_json(p.share)},
          {"blocks", elements_to_json(p.data.blocks)},
          {"tags", elements_to_json(p.data.tags)}};
}

ProverState prover_from_json(const Json& j, FieldModulus m) {
  ProverState p;
  p.index = uint_from_json(field(j, "index"), "index");
  p.share = elements_from_json(field(j, "share"), m);
  p.data.blocks = elements_from_json(field(j, "blocks"), m);
  p.data.tags = elements_from_json(field(j, "tags"), m);
  return p;
}

Json to_json(const AuditTranscript& t) {
  Json out = Json::array();
  for (const auto& r : t) {
    out.push_back({{"prover", r.prover},
                   {"challenge", r.challenge},
                   {"response", elements_to_json(r.response)},
                   {"accepted", r.accepted}});
  }
  return out;
}

AuditTranscript transcript_from_json(const Json& j, FieldModulus m) {
  if (!j.is_array()) throw std::invalid_argument("transcript must be an array");
  AuditTranscript out;
  for (const auto& r : j) {
    const Json& accepted = field(r, "accepted");
    if (!accepted.is_boolean()) throw std::invalid_argument("'accepted' must be a boolean");
    out.push_back({uint_from_json(field(r, "prover"), "prover"), uint_from_json(field(r, "challenge"), "challenge"),
                   r.contains("response") ? elements_from_json(r.at("response"), m) : Response{}, accepted.get<bool>()});
  }
  return out;
}

Json to_json(const ExtractionReport& r) {
  Json succ = Json::array();
  for (const auto& s : r.succ) {
    succ.push_back({{"prover", s.prover},
                    {"succ", to_string(s.succ)},
                    {"succ_decimal", to_double(s.succ)},
                    {"meets_threshold", s.meets_threshold}});
  }
  Json out = {{"mode", to_string(r.mode)},
              {"subset", r.subset},
              {"recovered", r.recovered ? elements_to_json(*r.recovered) : Json(nullptr)},
              {"failure", r.failure},
              {"threshold", to_string(r.threshold)},
              {"threshold_decimal", to_double(r.threshold)},
              {"guaranteed", r.guaranteed},
              {"succ", succ}};
  return out;
}

Json to_json(const TestOutcome& t) {
  return {{"b", t.b},
          {"alpha", t.alpha},
          {"lambda_u", t.lambda_u},
          {"expected_failures", t.expected_failures},
          {"decision", to_string(t.decision)}};
}

Json to_json(const StorageAccounting& s) {
  return {{"verifier_elements", s.verifier_elements}, {"per_prover_elements", s.per_prover_elements}};
}

Json to_json(const CorruptionSpec& spec) {
  Json out = {{"mode", to_string(spec.mode)}};
  if (spec.mode == CorruptionMode::RandomK || spec.mode == CorruptionMode::TargetedK) out["k"] = spec.k;
  if (spec.mode == CorruptionMode::RandomK) out["seed"] = spec.seed;
  if (spec.mode == CorruptionMode::DeleteBlocks) out["blocks"] = spec.blocks;
  return out;
}

CorruptionSpec corruption_spec_from_json(const Json& j) {
  CorruptionSpec spec;
  spec.mode = parse_corruption_mode(field(j, "mode").get<std::string>());
  if (j.contains("k")) spec.k = uint_from_json(j.at("k"), "k");
  if (j.contains("seed")) spec.seed = uint_from_json(j.at("seed"), "seed");
  if (j.contains("blocks")) {
    for (const auto& b : j.at("blocks")) spec.blocks.insert(uint_from_json(b, "block"));
  }
  return spec;
}

}  // namespace mpor
