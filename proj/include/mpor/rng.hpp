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
#include <random>

#include "mpor/field.hpp"

namespace mpor {

// Explicitly seeded randomness source. std::mt19937_64's output sequence is
// fixed by the standard; bounded draws use rejection sampling rather than
// std::uniform_int_distribution so results are identical across standard
// libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  FieldElement element(FieldModulus m) { return {uniform(m.value()), m}; }
  FieldElement nonzero_element(FieldModulus m) { return {1 + uniform(m.value() - 1), m}; }

  // Independent child stream; the same (seed, index) always yields the same stream.
  SeededRng stream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace mpor
