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

#include <doctest.h>

#include <stdexcept>

#include "mpor/indexed_code_por.hpp"
#include "mpor/serialize.hpp"
#include "mpor/shacham_waters.hpp"

using namespace mpor;

TEST_CASE("field elements") {
  const FieldModulus m(17);
  const auto v = to_elements({0, 16, 3}, m);
  CHECK(elements_from_json(elements_to_json(v), m) == v);
  CHECK(elements_from_json(Json::parse(R"(["4", 5])"), m) == to_elements({4, 5}, m));
  CHECK_THROWS_AS(elements_from_json(Json::parse("[17]"), m), std::invalid_argument);
  CHECK_THROWS_AS(elements_from_json(Json::parse("[-1]"), m), std::invalid_argument);
  CHECK_THROWS_AS(elements_from_json(Json::parse(R"(["x"])"), m), std::exception);
  CHECK_THROWS_AS(elements_from_json(Json::parse("3"), m), std::invalid_argument);
}

TEST_CASE("share vectors") {
  const FieldModulus m(17);
  const RampScheme r = RampScheme::reed_solomon(2, 4, 6, m);
  const ShareVector sv = r.share_gen_with_coins(to_elements({15, 3}, m), to_elements({1, 2}, m));
  const ShareVector back = share_vector_from_json(to_json(sv));
  CHECK(back.params == sv.params);
  CHECK(back.shares == sv.shares);
}

TEST_CASE("verifier and prover state") {
  const FieldModulus m(13);
  const auto sw = std::make_shared<ShachamWatersPor>(LinearCode::identity(m, 3), 1);
  for (MporKind kind : {MporKind::Sw, MporKind::Basic}) {
    const MporSystem sys(kind, RampScheme::reed_solomon(1, 2, 3, m), sw);
    const SetupResult r = sys.setup(to_elements({1, 2, 3}, m), SeededRng(4));
    const VerifierState v = verifier_from_json(to_json(r.verifier, m), m);
    CHECK(v.kind == kind);
    CHECK(v.keys == r.verifier.keys);
    CHECK(v.key_polynomials == r.verifier.key_polynomials);
    for (const auto& p : r.provers) CHECK(prover_from_json(to_json(p), m) == p);
    CHECK_THROWS_AS(verifier_from_json(to_json(r.verifier, m), FieldModulus(11)), std::invalid_argument);
  }
}

TEST_CASE("transcripts and reports") {
  const FieldModulus m(5);
  const AuditTranscript t = {{1, 3, to_elements({2}, m), true}, {2, 0, to_elements({4, 1}, m), false}};
  const AuditTranscript back = transcript_from_json(to_json(t), m);
  REQUIRE(back.size() == 2);
  CHECK(back[1].prover == 2);
  CHECK(back[1].response == to_elements({4, 1}, m));
  CHECK_FALSE(back[1].accepted);
  CHECK_THROWS_AS(transcript_from_json(Json::parse(R"([{"prover":1,"challenge":0,"accepted":1}])"), m),
                  std::invalid_argument);

  ExtractionReport rep;
  rep.threshold = Rational(3, 4);
  rep.succ = {{1, Rational(9, 10), true}};
  const Json j = to_json(rep);
  CHECK(j["threshold"] == "3/4");
  CHECK(j["recovered"].is_null());
  CHECK(j["succ"][0]["succ"] == "9/10");
}

TEST_CASE("corruption specs") {
  const CorruptionSpec spec{CorruptionMode::DeleteBlocks, 0, {1, 4}, 0};
  CHECK(corruption_spec_from_json(to_json(spec)) == spec);
  const CorruptionSpec rk{CorruptionMode::RandomK, 3, {}, 9};
  CHECK(corruption_spec_from_json(to_json(rk)) == rk);
  CHECK_THROWS_AS(corruption_spec_from_json(Json::parse(R"({"k":1})")), std::invalid_argument);
}
