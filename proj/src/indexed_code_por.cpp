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

#include "mpor/indexed_code_por.hpp"

#include <stdexcept>

namespace mpor {

Response IndexedCodePor::respond(const ProverData& data, Challenge c) const { return code_symbol(data.blocks, c); }

Response IndexedCodePor::code_symbol(std::span<const FieldElement> blocks, Challenge c) const {
  check_challenge(c);
  if (blocks.size() != block_count()) throw std::invalid_argument("stored block count does not match code length");
  return {blocks[c]};
}

bool IndexedCodePor::verify(const Fingerprint& fingerprint, Challenge c, const Response& r) const {
  const auto* blocks = std::get_if<Blocks>(&fingerprint);
  if (blocks == nullptr) throw std::invalid_argument("indexed-code PoR verifies against stored blocks, not a key");
  return r == code_symbol(*blocks, c);
}

}  // namespace mpor
