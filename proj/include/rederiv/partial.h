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

#ifndef REDERIV_PARTIAL_H_
#define REDERIV_PARTIAL_H_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "rederiv/regex.h"

namespace rederiv {

// A set of syntactically distinct expressions. Used both for the result of a
// single partial-derivative step and for a monitor's state; an empty frontier
// means no rule applies, i.e. the word read so far is not a prefix of any
// word of the language.
class Frontier {
 public:
  using const_iterator = std::set<Regex>::const_iterator;

  Frontier() = default;
  Frontier(std::initializer_list<Regex> exprs) : exprs_(exprs) {}

  bool insert(const Regex& e) { return exprs_.insert(e).second; }
  void merge(const Frontier& other) {
    exprs_.insert(other.begin(), other.end());
  }

  bool contains(const Regex& e) const { return exprs_.count(e) != 0; }
  bool empty() const { return exprs_.empty(); }
  std::size_t size() const { return exprs_.size(); }
  const_iterator begin() const { return exprs_.begin(); }
  const_iterator end() const { return exprs_.end(); }

  // Members ordered by their formatted text.
  std::vector<Regex> SortedByText() const;

  friend bool operator==(const Frontier&, const Frontier&) = default;

 private:
  std::set<Regex> exprs_;
};

// All e' with e --a--> e' under the partial-derivative rules, including the
// two shuffle projections.
Frontier PartialDerivatives(const Regex& e, const Symbol& a);

// Set-lifted step: the union of PartialDerivatives over every member.
Frontier Step(const Frontier& frontier, const Symbol& a);

// PartialDerivativesWord(e, {}) == {e}.
Frontier PartialDerivativesWord(const Regex& e, const Trace& w);

bool AnyAccepting(const Frontier& frontier);

bool AcceptsByPartial(const Regex& e, const Trace& w);

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// Least set containing e and closed under PartialDerivatives for every
// symbol of e. Throws ResourceError once more than state_cap expressions
// have been discovered.
std::set<Regex> Closure(const Regex& e,
                        std::size_t state_cap = kDefaultStateCap);

}  // namespace rederiv

#endif  // REDERIV_PARTIAL_H_
