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

#include "rederiv/partial.h"

#include <algorithm>
#include <deque>
#include <utility>

#include "rederiv/oracle.h"

namespace rederiv {

namespace {

void Collect(const Regex& e, const Symbol& a, Frontier& out);

// Applies wrap to every partial derivative of e and adds the result to out.
template <typename Wrap>
void CollectWrapped(const Regex& e, const Symbol& a, Wrap wrap,
                    Frontier& out) {
  Frontier inner;
  Collect(e, a, inner);
  for (const Regex& d : inner) out.insert(wrap(d));
}

void Collect(const Regex& e, const Symbol& a, Frontier& out) {
  switch (e.kind()) {
    case Kind::kEmpty:
    case Kind::kEps:
      return;
    case Kind::kSym:
      if (e.symbol() == a) out.insert(Eps());
      return;
    case Kind::kCat:
      CollectWrapped(
          e.left(), a, [&](const Regex& d) { return Cat(d, e.right()); }, out);
      if (HasEps(e.left()) == EpsFlag::kEps) Collect(e.right(), a, out);
      return;
    case Kind::kOr:
      Collect(e.left(), a, out);
      Collect(e.right(), a, out);
      return;
    case Kind::kStar:
      CollectWrapped(
          e.sub(), a, [&](const Regex& d) { return Cat(d, e); }, out);
      return;
    case Kind::kShuffle:
      CollectWrapped(
          e.left(), a, [&](const Regex& d) { return Shuffle(d, e.right()); },
          out);
      CollectWrapped(
          e.right(), a, [&](const Regex& d) { return Shuffle(e.left(), d); },
          out);
      return;
  }
}

}  // namespace

std::vector<Regex> Frontier::SortedByText() const {
  std::vector<std::pair<std::string, Regex>> keyed;
  keyed.reserve(exprs_.size());
  for (const Regex& e : exprs_) keyed.emplace_back(Format(e), e);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second < y.second;
  });
  std::vector<Regex> out;
  out.reserve(keyed.size());
  for (auto& [text, e] : keyed) out.push_back(std::move(e));
  return out;
}

Frontier PartialDerivatives(const Regex& e, const Symbol& a) {
  Frontier out;
  Collect(e, a, out);
  return out;
}

Frontier Step(const Frontier& frontier, const Symbol& a) {
  Frontier out;
  for (const Regex& e : frontier) Collect(e, a, out);
  return out;
}

Frontier PartialDerivativesWord(const Regex& e, const Trace& w) {
  Frontier current{e};
  for (const Symbol& a : w) {
    if (current.empty()) break;
    current = Step(current, a);
  }
  return current;
}

bool AnyAccepting(const Frontier& frontier) {
  return std::any_of(frontier.begin(), frontier.end(), [](const Regex& e) {
    return HasEps(e) == EpsFlag::kEps;
  });
}

bool AcceptsByPartial(const Regex& e, const Trace& w) {
  return AnyAccepting(PartialDerivativesWord(e, w));
}

std::set<Regex> Closure(const Regex& e, std::size_t state_cap) {
  const std::vector<Symbol> alphabet = SymbolsOf(e);
  std::set<Regex> seen = {e};
  std::deque<Regex> work = {e};
  while (!work.empty()) {
    Regex current = std::move(work.front());
    work.pop_front();
    for (const Symbol& a : alphabet) {
      for (const Regex& d : PartialDerivatives(current, a)) {
        if (!seen.insert(d).second) continue;
        if (seen.size() > state_cap) {
          throw ResourceError("closure exceeds " + std::to_string(state_cap) +
                              " states");
        }
        work.push_back(d);
      }
    }
  }
  return seen;
}

}  // namespace rederiv
