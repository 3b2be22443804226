// Copyright 2026 The Rederiv Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Randomized cross-checks of every engine against the brute-force oracle and
// of the bound invariants, with greedy shrinking of failing expressions.

#ifndef REDERIV_FUZZ_H_
#define REDERIV_FUZZ_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rederiv/regex.h"

namespace rederiv {

struct FuzzOptions {
  // Agreement is checked on every word up to this length.
  std::size_t max_word_len = 4;
  // Bound invariants are checked on every step reachable within this many
  // symbols.
  std::size_t walk_depth = 6;
};

// Returns a description of the first property e violates, or nothing.
std::optional<std::string> CheckProperties(const Regex& e,
                                           const std::vector<Symbol>& alphabet,
                                           const FuzzOptions& options = {});

// Greedily replaces e by strictly smaller expressions that still fail.
Regex Shrink(const Regex& e, const std::function<bool(const Regex&)>& fails);

struct FuzzSummary {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<Regex> counterexample;  // shrunk, first failure only
  std::string reason;
};

FuzzSummary RunFuzz(std::size_t count, std::uint64_t seed, bool shuffle,
                    const FuzzOptions& options = {});

}  // namespace rederiv

#endif  // REDERIV_FUZZ_H_
