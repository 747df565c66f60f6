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
#include "mpor/linear_code.hpp"
#include "mpor/por.hpp"

using namespace mpor;

namespace {

LinearCode position_code17() {
  const FieldModulus m(17);
  std::vector<std::uint64_t> row;
  for (std::uint64_t i = 1; i <= 16; ++i) row.push_back(i);
  return LinearCode::from_values({row}, m);
}

}  // namespace

TEST_CASE("challenge-response pairs of the six-prover example") {
  const IndexedCodePor por(position_code17());
  const FieldModulus m(17);
  // Challenge j (1-based position) is index j - 1.
  const std::uint64_t shares[] = {4, 7, 2, 1, 16, 8};
  const std::uint64_t challenges[] = {5, 2, 9, 13, 5, 6};
  const std::uint64_t responses[] = {3, 14, 1, 13, 12, 14};
  for (int i = 0; i < 6; ++i) {
    const ProverData data{por.encode(to_elements({shares[i]}, m)), {}};
    const Response r = por.respond(data, challenges[i] - 1);
    CHECK(r == to_elements({responses[i]}, m));
    CHECK(por.verify(data.blocks, challenges[i] - 1, r));
    CHECK_FALSE(por.verify(data.blocks, challenges[i] - 1, to_elements({(responses[i] + 1) % 17}, m)));
  }
}

TEST_CASE("response code of the position code") {
  const IndexedCodePor por(position_code17());
  const ResponseCode code = build_response_code(por);
  CHECK(code.codeword_count() == 17);
  CHECK(code.challenge_count() == 16);
  CHECK(code.distance() == 16);
  CHECK(por.extraction_threshold(code) == Rational(1, 2));
}

TEST_CASE("response code distance equals the code distance") {
  const FieldModulus m(5);
  const IndexedCodePor por(LinearCode::reed_solomon(m, 6, 2));
  const ResponseCode code = build_response_code(por);
  CHECK(code.distance() == 5);
  CHECK(por.extraction_threshold(code) == Rational(7, 12));
}

TEST_CASE("response code size limits") {
  const FieldModulus m(5);
  CHECK_THROWS_AS(build_response_code(IndexedCodePor(LinearCode::identity(m, 12))), std::invalid_argument);
}

TEST_CASE("honest provers succeed and are frozen") {
  const FieldModulus m(5);
  const IndexedCodePor por(LinearCode::reed_solomon(m, 6, 2));
  const ProverData data{por.encode(to_elements({3, 1}, m)), {}};
  ProvingAlgorithm p = honest_prover(por, data);
  CHECK(p.frozen());
  CHECK(measure_success(p, make_acceptor(por, data.blocks)) == 1);
  CHECK_THROWS_AS(p.set_response(0, {}), std::logic_error);
}

TEST_CASE("nearest extraction corrects up to half the distance") {
  const FieldModulus m(5);
  const IndexedCodePor por(LinearCode::reed_solomon(m, 6, 2));
  const ResponseCode code = build_response_code(por);
  const auto msg = to_elements({2, 4}, m);
  const ProverData data{por.encode(msg), {}};
  ProvingAlgorithm p = honest_prover(por, data);
  ProvingAlgorithm bad(p.table());
  bad.set_response(0, to_elements({(data.blocks[0].value() + 1) % 5}, m));
  bad.set_response(3, to_elements({(data.blocks[3].value() + 2) % 5}, m));
  const NearestResult r = extract_nearest(por, code, bad);
  CHECK(r.message == msg);
  CHECK(r.distance == 2);
  CHECK(measure_success(bad, make_acceptor(por, data.blocks)) == Rational(2, 3));
}

TEST_CASE("ties go to the lexicographically smallest message") {
  const FieldModulus m(3);
  const IndexedCodePor por(LinearCode::identity(m, 2));
  const ProvingAlgorithm garbage({Response{}, Response{}});
  const NearestResult g = extract_nearest(por, garbage);
  CHECK(g.rank == 0);
  CHECK(g.message == to_elements({0, 0}, m));
  CHECK(g.distance == 2);
  // Equidistant from (1, 0), (1, 1) and (1, 2).
  const ProvingAlgorithm half({to_elements({1}, m), Response{}});
  const NearestResult h = extract_nearest(por, half);
  CHECK(h.message == to_elements({1, 0}, m));
  CHECK(h.distance == 1);
}

TEST_CASE("success averaged over several acceptors") {
  const FieldModulus m(5);
  const IndexedCodePor por(LinearCode::identity(m, 2));
  const ProvingAlgorithm p({to_elements({1}, m), to_elements({1}, m)});
  const Acceptor acc[] = {make_acceptor(por, Blocks(to_elements({1, 1}, m))),
                          make_acceptor(por, Blocks(to_elements({1, 0}, m)))};
  CHECK(measure_success_avg(p, acc) == Rational(3, 4));
}

TEST_CASE("challenge range checks") {
  const FieldModulus m(5);
  const IndexedCodePor por(LinearCode::identity(m, 2));
  CHECK_THROWS_AS(por.check_challenge(2), std::invalid_argument);
  CHECK_THROWS_AS(por.verify(SwKey{FieldElement(1, m), {}}, 0, {}), std::invalid_argument);
}
