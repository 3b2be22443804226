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

#include "rederiv/fuzz.h"

#include <deque>
#include <set>
#include <sstream>

#include "rederiv/automaton.h"
#include "rederiv/bounds.h"
#include "rederiv/corpus.h"
#include "rederiv/derivative.h"
#include "rederiv/oracle.h"
#include "rederiv/partial.h"

namespace rederiv {

namespace {

std::string Describe(const std::string& what, const Regex& e) {
  return what + " on " + Format(e);
}

std::optional<std::string> CheckAgreement(const Regex& e,
                                          const std::vector<Symbol>& alphabet,
                                          std::size_t max_len) {
  const BoundedLanguage lang = LangUpTo(e, max_len);
  const Nfa nfa = BuildNfa(e);
  for (const Trace& w : AllWords(alphabet, max_len)) {
    const bool oracle = lang.contains(w);
    const bool derivative = AcceptsByDerivative(e, w);
    const bool partial = AcceptsByPartial(e, w);
    const bool automaton = NfaAccepts(nfa, w);
    if (oracle != derivative || oracle != partial || oracle != automaton) {
      std::ostringstream out;
      out << "acceptance mismatch on \"" << FormatTrace(w)
          << "\" (oracle=" << oracle << " derivative=" << derivative
          << " partial=" << partial << " nfa=" << automaton << ")";
      return Describe(out.str(), e);
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckBounds(const Regex& e,
                                       const std::vector<Symbol>& alphabet,
                                       std::size_t depth) {
  const int delta = DeltaMax(e);
  const std::int64_t eta = EtaMax(e);
  const std::int64_t size = static_cast<std::int64_t>(Size(e));
  if (delta < 0 || delta > 1) return Describe("DeltaMax out of [0,1]", e);
  if (eta < 0 || eta > size * size) {
    return Describe("EtaMax out of [0,size^2]", e);
  }
  const std::size_t height_cap = Height(e) + 1;
  const std::size_t size_cap = Size(e) + Size(e) * Size(e);
  std::set<Regex> seen = {e};
  std::vector<Regex> layer = {e};
  for (std::size_t d = 0; d < depth && !layer.empty(); ++d) {
    std::vector<Regex> next;
    for (const Regex& x : layer) {
      for (const Symbol& a : alphabet) {
        for (const BoundReport& r : CheckHeightInvariant(x, a)) {
          if (!r.Holds()) return Describe("height invariant broken", x);
        }
        for (const BoundReport& r : CheckSizeInvariant(x, a)) {
          if (!r.Holds()) return Describe("size invariant broken", x);
        }
        for (const Regex& y : PartialDerivatives(x, a)) {
          if (Height(y) > height_cap) {
            return Describe("height corollary broken", e);
          }
          if (Size(y) > size_cap) return Describe("size corollary broken", e);
          if (IsShuffleFree(x) && DeltaMax(y) != 0) {
            return Describe("shuffle-free DeltaMax not zero", x);
          }
          if (Height(y) == Height(x) + 1 && DeltaMax(y) != 0) {
            return Describe("DeltaMax not zero after height step", x);
          }
          if (Height(y) == Height(x) && DeltaMax(y) > DeltaMax(x)) {
            return Describe("DeltaMax grew at equal height", x);
          }
          if (seen.insert(y).second) next.push_back(y);
        }
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

void SmallerVariants(const Regex& e, std::vector<Regex>& out) {
  if (e.kind() != Kind::kEmpty && e.kind() != Kind::kEps) {
    out.push_back(Eps());
    out.push_back(Empty());
  }
  switch (e.kind()) {
    case Kind::kStar: {
      out.push_back(e.sub());
      std::vector<Regex> inner;
      SmallerVariants(e.sub(), inner);
      for (const Regex& s : inner) out.push_back(Star(s));
      break;
    }
    case Kind::kCat:
    case Kind::kOr:
    case Kind::kShuffle: {
      out.push_back(e.left());
      out.push_back(e.right());
      const auto rebuild = [&](const Regex& l, const Regex& r) {
        if (e.kind() == Kind::kCat) return Cat(l, r);
        if (e.kind() == Kind::kOr) return Or(l, r);
        return Shuffle(l, r);
      };
      std::vector<Regex> left, right;
      SmallerVariants(e.left(), left);
      SmallerVariants(e.right(), right);
      for (const Regex& l : left) out.push_back(rebuild(l, e.right()));
      for (const Regex& r : right) out.push_back(rebuild(e.left(), r));
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::optional<std::string> CheckProperties(const Regex& e,
                                           const std::vector<Symbol>& alphabet,
                                           const FuzzOptions& options) {
  if (auto failure = CheckAgreement(e, alphabet, options.max_word_len)) {
    return failure;
  }
  if (IsShuffleFree(e) && Closure(e).size() > Size(e) + 1) {
    return Describe("shuffle-free closure larger than size+1", e);
  }
  return CheckBounds(e, alphabet, options.walk_depth);
}

Regex Shrink(const Regex& e, const std::function<bool(const Regex&)>& fails) {
  Regex current = e;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<Regex> candidates;
    SmallerVariants(current, candidates);
    for (const Regex& c : candidates) {
      const bool smaller =
          Size(c) < Size(current) ||
          (Size(c) == Size(current) && c < current);
      if (smaller) {
        if (fails(c)) {
          current = c;
          progress = true;
          break;
        }
      }
    }
  }
  return current;
}

FuzzSummary RunFuzz(std::size_t count, std::uint64_t seed, bool shuffle,
                    const FuzzOptions& options) {
  GenConfig config;
  config.seed = seed;
  config.shuffle_enabled = shuffle;
  RegexGenerator gen(config);
  FuzzSummary summary;
  for (std::size_t i = 0; i < count; ++i) {
    const Regex e = gen.Next();
    ++summary.checked;
    auto failure = CheckProperties(e, gen.alphabet(), options);
    if (!failure) continue;
    ++summary.failures;
    if (!summary.counterexample) {
      const auto fails = [&](const Regex& c) {
        return CheckProperties(c, gen.alphabet(), options).has_value();
      };
      const Regex shrunk = Shrink(e, fails);
      summary.counterexample = shrunk;
      summary.reason = *CheckProperties(shrunk, gen.alphabet(), options);
    }
  }
  return summary;
}

}  // namespace rederiv
