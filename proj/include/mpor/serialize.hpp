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

#include <json.hpp>

#include "mpor/adversary.hpp"
#include "mpor/audit_stats.hpp"
#include "mpor/mpor.hpp"
#include "mpor/ramp.hpp"

namespace mpor {

using Json = nlohmann::ordered_json;

// Field elements are written as plain integers. Readers accept integers or
// decimal strings and reduce nothing: out-of-range values are rejected.
Json elements_to_json(std::span<const FieldElement> v);
std::vector<FieldElement> elements_from_json(const Json& j, FieldModulus m);
FieldElement element_from_json(const Json& j, FieldModulus m);

Json to_json(const RampParams& p);
RampParams ramp_params_from_json(const Json& j, FieldModulus m);

Json to_json(const ShareVector& shares);
ShareVector share_vector_from_json(const Json& j);

Json to_json(const SwKey& key);
SwKey sw_key_from_json(const Json& j, FieldModulus m);

Json to_json(const VerifierState& v, FieldModulus m);
VerifierState verifier_from_json(const Json& j, FieldModulus m);

Json to_json(const ProverState& p);
ProverState prover_from_json(const Json& j, FieldModulus m);

Json to_json(const AuditTranscript& t);
AuditTranscript transcript_from_json(const Json& j, FieldModulus m);

Json to_json(const ExtractionReport& r);
Json to_json(const TestOutcome& t);
Json to_json(const StorageAccounting& s);

Json to_json(const CorruptionSpec& spec);
CorruptionSpec corruption_spec_from_json(const Json& j);

}  // namespace mpor
