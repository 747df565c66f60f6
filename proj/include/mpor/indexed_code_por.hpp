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

#include "mpor/linear_code.hpp"
#include "mpor/por.hpp"

namespace mpor {

// Unkeyed PoR over a linear [N, k, d] code: the challenge is a position and
// the response is the stored symbol there. Its response code is the code
// itself, so d~ = d and gamma = N.
class IndexedCodePor final : public PorScheme {
 public:
  explicit IndexedCodePor(LinearCode code) : code_(std::move(code)) {}

  const LinearCode& code() const noexcept { return code_; }

  const FieldModulus& field() const override { return code_.modulus(); }
  std::size_t message_length() const override { return code_.dimension(); }
  std::size_t block_count() const override { return code_.length(); }
  std::uint64_t challenge_count() const override { return code_.length(); }
  std::size_t response_width() const override { return 1; }
  bool keyed() const override { return false; }

  Blocks encode(std::span<const FieldElement> message) const override { return code_.encode(message); }
  std::vector<FieldElement> decode(std::span<const FieldElement> blocks) const override { return code_.decode(blocks); }

  Response respond(const ProverData& data, Challenge c) const override;
  Response code_symbol(std::span<const FieldElement> blocks, Challenge c) const override;
  // Accepts iff the response equals the fingerprint's symbol at position c.
  bool verify(const Fingerprint& fingerprint, Challenge c, const Response& r) const override;

 private:
  LinearCode code_;
};

}  // namespace mpor
