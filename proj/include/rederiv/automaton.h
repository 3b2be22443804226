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

#ifndef REDERIV_AUTOMATON_H_
#define REDERIV_AUTOMATON_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rederiv/partial.h"
#include "rederiv/regex.h"

namespace rederiv {

struct Transition {
  std::size_t from;
  Symbol symbol;
  std::size_t to;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// The automaton whose states are the syntactically distinct partial
// derivatives reachable from an expression. State 0 is the expression
// itself; a state is final iff its expression accepts the empty word.
class Nfa {
 public:
  const std::vector<Regex>& states() const { return states_; }
  std::size_t initial() const { return 0; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  // Ascending.
  const std::vector<std::size_t>& finals() const { return finals_; }
  bool is_final(std::size_t state) const { return final_flags_[state]; }

  const std::vector<std::size_t>& Successors(std::size_t state,
                                             const Symbol& a) const;

 private:
  friend Nfa BuildNfa(const Regex& e, std::size_t state_cap);

  std::vector<Regex> states_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> finals_;
  std::vector<bool> final_flags_;
  std::vector<std::map<Symbol, std::vector<std::size_t>>> successors_;
};

// States are numbered in breadth-first discovery order; for each state the
// symbols are visited in ascending order and the derivatives for a symbol in
// order of their formatted text. The numbering is therefore a function of e
// alone.
Nfa BuildNfa(const Regex& e, std::size_t state_cap = kDefaultStateCap);

// Standard subset simulation.
bool NfaAccepts(const Nfa& nfa, const Trace& w);

// {"states": [...], "initial": 0, "finals": [...],
//  "transitions": [[from, symbol, to], ...]}
std::string NfaToJson(const Nfa& nfa);

std::string NfaToDot(const Nfa& nfa);

// o1 a1 c1 || o2 a2 c2 || ... || on an cn, shuffles associated to the left.
Regex FileDescriptorSpec(std::size_t n);

// Number of states of BuildNfa(FileDescriptorSpec(n)). Requires 1 <= n <= 8.
std::size_t StateGrowthBench(std::size_t n,
                             std::size_t state_cap = kDefaultStateCap);

}  // namespace rederiv

#endif  // REDERIV_AUTOMATON_H_
