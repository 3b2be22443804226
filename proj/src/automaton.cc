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

#include "rederiv/automaton.h"

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "rederiv/oracle.h"

namespace rederiv {

const std::vector<std::size_t>& Nfa::Successors(std::size_t state,
                                                const Symbol& a) const {
  static const std::vector<std::size_t> kNone;
  const auto& by_symbol = successors_[state];
  auto it = by_symbol.find(a);
  return it == by_symbol.end() ? kNone : it->second;
}

Nfa BuildNfa(const Regex& e, std::size_t state_cap) {
  const std::vector<Symbol> alphabet = SymbolsOf(e);
  Nfa nfa;
  std::unordered_map<Regex, std::size_t, RegexHash> index;
  nfa.states_.push_back(e);
  index.emplace(e, 0);
  for (std::size_t s = 0; s < nfa.states_.size(); ++s) {
    nfa.successors_.emplace_back();
    const Regex current = nfa.states_[s];
    for (const Symbol& a : alphabet) {
      for (const Regex& d : PartialDerivatives(current, a).SortedByText()) {
        auto [it, inserted] = index.emplace(d, nfa.states_.size());
        if (inserted) {
          if (nfa.states_.size() >= state_cap) {
            throw ResourceError("automaton exceeds " +
                                std::to_string(state_cap) + " states");
          }
          nfa.states_.push_back(d);
        }
        nfa.transitions_.push_back({s, a, it->second});
        nfa.successors_[s][a].push_back(it->second);
      }
    }
  }
  nfa.final_flags_.resize(nfa.states_.size());
  for (std::size_t s = 0; s < nfa.states_.size(); ++s) {
    nfa.final_flags_[s] = HasEps(nfa.states_[s]) == EpsFlag::kEps;
    if (nfa.final_flags_[s]) nfa.finals_.push_back(s);
  }
  return nfa;
}

bool NfaAccepts(const Nfa& nfa, const Trace& w) {
  std::set<std::size_t> current = {nfa.initial()};
  for (const Symbol& a : w) {
    std::set<std::size_t> next;
    for (std::size_t s : current) {
      const auto& succ = nfa.Successors(s, a);
      next.insert(succ.begin(), succ.end());
    }
    if (next.empty()) return false;
    current = std::move(next);
  }
  for (std::size_t s : current) {
    if (nfa.is_final(s)) return true;
  }
  return false;
}

std::string NfaToJson(const Nfa& nfa) {
  nlohmann::ordered_json j;
  j["states"] = nlohmann::ordered_json::array();
  for (const Regex& s : nfa.states()) j["states"].push_back(Format(s));
  j["initial"] = nfa.initial();
  j["finals"] = nfa.finals();
  j["transitions"] = nlohmann::ordered_json::array();
  for (const Transition& t : nfa.transitions()) {
    j["transitions"].push_back({t.from, t.symbol.name(), t.to});
  }
  return j.dump(2);
}

namespace {

std::string DotEscape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string NfaToDot(const Nfa& nfa) {
  std::ostringstream out;
  out << "digraph nfa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (std::size_t s = 0; s < nfa.states().size(); ++s) {
    out << "  " << s << " [label=\"" << DotEscape(Format(nfa.states()[s]))
        << "\", shape=" << (nfa.is_final(s) ? "doublecircle" : "circle")
        << "];\n";
  }
  out << "  start -> " << nfa.initial() << ";\n";
  for (const Transition& t : nfa.transitions()) {
    out << "  " << t.from << " -> " << t.to << " [label=\"" << t.symbol.name()
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Regex FileDescriptorSpec(std::size_t n) {
  if (n == 0) throw std::invalid_argument("need at least one file");
  std::optional<Regex> spec;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string k = std::to_string(i);
    Regex file = Cat(Cat(Sym("o" + k), Sym("a" + k)), Sym("c" + k));
    spec = spec ? Shuffle(*spec, file) : file;
  }
  return *spec;
}

std::size_t StateGrowthBench(std::size_t n, std::size_t state_cap) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("state growth bench needs 1 <= n <= 8");
  }
  return BuildNfa(FileDescriptorSpec(n), state_cap).states().size();
}

}  // namespace rederiv
