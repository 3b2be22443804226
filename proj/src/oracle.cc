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

#include "rederiv/oracle.h"

#include <utility>

namespace rederiv {

namespace {

void ShuffleInto(const Trace& w1, std::size_t i, const Trace& w2,
                 std::size_t j, Trace& prefix, WordSet& out) {
  if (i == w1.size() || j == w2.size()) {
    Trace word = prefix;
    word.insert(word.end(), w1.begin() + i, w1.end());
    word.insert(word.end(), w2.begin() + j, w2.end());
    out.insert(std::move(word));
    return;
  }
  prefix.push_back(w1[i]);
  ShuffleInto(w1, i + 1, w2, j, prefix, out);
  prefix.back() = w2[j];
  ShuffleInto(w1, i, w2, j + 1, prefix, out);
  prefix.pop_back();
}

class Enumerator {
 public:
  Enumerator(std::size_t max_len, const OracleLimits& limits)
      : max_len_(max_len), limits_(limits) {}

  WordSet Lang(const Regex& e) {
    switch (e.kind()) {
      case Kind::kEmpty:
        return {};
      case Kind::kEps:
        return {Trace{}};
      case Kind::kSym:
        if (max_len_ == 0) return {};
        return {Trace{e.symbol()}};
      case Kind::kCat:
        return Concat(Lang(e.left()), Lang(e.right()));
      case Kind::kOr: {
        WordSet out = Lang(e.left());
        WordSet right = Lang(e.right());
        out.insert(right.begin(), right.end());
        Check(out);
        return out;
      }
      case Kind::kStar:
        return Kleene(Lang(e.sub()));
      case Kind::kShuffle:
        return Interleave(Lang(e.left()), Lang(e.right()));
    }
    return {};
  }

 private:
  void Check(const WordSet& words) const {
    if (words.size() > limits_.max_words) {
      throw ResourceError("bounded language exceeds " +
                          std::to_string(limits_.max_words) + " words");
    }
  }

  WordSet Concat(const WordSet& l0, const WordSet& l1) const {
    WordSet out;
    for (const Trace& w0 : l0) {
      for (const Trace& w1 : l1) {
        if (w0.size() + w1.size() > max_len_) continue;
        Trace w = w0;
        w.insert(w.end(), w1.begin(), w1.end());
        out.insert(std::move(w));
      }
      Check(out);
    }
    return out;
  }

  // L* = union of L^n. Each round adds L^(n+1) = L . L^n; words only get
  // longer or stay put, so under the length bound the rounds reach a
  // fixpoint.
  WordSet Kleene(const WordSet& l) const {
    WordSet result = {Trace{}};
    WordSet power = {Trace{}};
    while (true) {
      WordSet next = Concat(l, power);
      WordSet fresh;
      for (const Trace& w : next) {
        if (result.insert(w).second) fresh.insert(w);
      }
      Check(result);
      if (fresh.empty()) return result;
      power = std::move(fresh);
    }
  }

  WordSet Interleave(const WordSet& l0, const WordSet& l1) const {
    WordSet out;
    for (const Trace& w0 : l0) {
      for (const Trace& w1 : l1) {
        if (w0.size() + w1.size() > max_len_) continue;
        WordSet mixed = ShuffleWords(w0, w1);
        out.insert(mixed.begin(), mixed.end());
      }
      Check(out);
    }
    return out;
  }

  std::size_t max_len_;
  const OracleLimits& limits_;
};

}  // namespace

WordSet ShuffleWords(const Trace& w1, const Trace& w2) {
  WordSet out;
  Trace prefix;
  ShuffleInto(w1, 0, w2, 0, prefix, out);
  return out;
}

BoundedLanguage LangUpTo(const Regex& e, std::size_t max_len,
                         const OracleLimits& limits) {
  if (max_len > limits.max_len) {
    throw ResourceError("word length bound " + std::to_string(max_len) +
                        " exceeds limit " + std::to_string(limits.max_len));
  }
  return {max_len, Enumerator(max_len, limits).Lang(e)};
}

bool MembershipOracle(const Regex& e, const Trace& w,
                      const OracleLimits& limits) {
  return LangUpTo(e, w.size(), limits).contains(w);
}

std::vector<Trace> AllWords(const std::vector<Symbol>& alphabet,
                            std::size_t max_len) {
  std::vector<Trace> words = {Trace{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const Symbol& s : alphabet) {
        Trace w = words[i];
        w.push_back(s);
        words.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return words;
}

}  // namespace rederiv
