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

// Brute-force language enumeration. Everything here works directly on sets
// of words and never looks at derivatives, so it can serve as ground truth
// for the derivative engines on small instances.

#ifndef REDERIV_ORACLE_H_
#define REDERIV_ORACLE_H_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

#include "rederiv/regex.h"

namespace rederiv {

// Raised when enumeration would exceed a configured limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using WordSet = std::set<Trace>;

struct OracleLimits {
  std::size_t max_len = 12;
  std::size_t max_words = 1'000'000;
};

// { w in L(e) : |w| <= max_len }.
struct BoundedLanguage {
  std::size_t max_len = 0;
  WordSet words;

  bool contains(const Trace& w) const { return words.count(w) != 0; }
};

// All order-preserving interleavings of two words.
WordSet ShuffleWords(const Trace& w1, const Trace& w2);

BoundedLanguage LangUpTo(const Regex& e, std::size_t max_len,
                         const OracleLimits& limits = {});

bool MembershipOracle(const Regex& e, const Trace& w,
                      const OracleLimits& limits = {});

// Every word of length <= max_len over the alphabet, shortest first.
std::vector<Trace> AllWords(const std::vector<Symbol>& alphabet,
                            std::size_t max_len);

}  // namespace rederiv

#endif  // REDERIV_ORACLE_H_
