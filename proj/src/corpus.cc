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

#include "rederiv/corpus.h"

#include <stdexcept>
#include <utility>

namespace rederiv {

std::vector<Symbol> Alphabet(std::size_t n) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name(1, static_cast<char>('a' + i % 26));
    if (i >= 26) name += std::to_string(i / 26);
    out.emplace_back(std::move(name));
  }
  return out;
}

RegexGenerator::RegexGenerator(GenConfig config)
    : config_(config),
      alphabet_(Alphabet(config.alphabet_size)),
      rng_(config.seed) {
  if (config_.max_size < 1) {
    throw std::invalid_argument("max_size must be at least 1");
  }
  if (alphabet_.empty()) {
    throw std::invalid_argument("alphabet must not be empty");
  }
}

Regex RegexGenerator::Next() {
  std::uniform_int_distribution<std::size_t> target(1, config_.max_size);
  return Generate(target(rng_), false);
}

Regex RegexGenerator::Generate(std::size_t budget, bool under_star) {
  enum Choice { kEmpty, kEps, kSym, kCat, kAlt, kStar, kShuffle };
  const ConstructorWeights& w = config_.weights;
  // The budget is spent exactly: leaves only at 1, so sizes follow the
  // uniform target drawn in Next().
  const bool leaf = budget == 1;
  const bool unary = budget >= 2;
  const bool binary = budget >= 3;
  const double weights[] = {
      leaf ? w.empty : 0.0,
      leaf ? w.eps : 0.0,
      leaf ? w.sym : 0.0,
      binary ? w.cat : 0.0,
      binary ? w.alt : 0.0,
      unary ? w.star * (under_star ? config_.nested_star_damping : 1.0) : 0.0,
      binary && config_.shuffle_enabled ? w.shuffle : 0.0,
  };
  std::discrete_distribution<int> pick(std::begin(weights), std::end(weights));
  const auto choice = static_cast<Choice>(pick(rng_));
  switch (choice) {
    case kEmpty:
      return Empty();
    case kEps:
      return Eps();
    case kSym: {
      std::uniform_int_distribution<std::size_t> s(0, alphabet_.size() - 1);
      return Sym(alphabet_[s(rng_)]);
    }
    case kStar:
      return Star(Generate(budget - 1, true));
    default: {
      std::uniform_int_distribution<std::size_t> split(1, budget - 2);
      const std::size_t left_budget = split(rng_);
      Regex left = Generate(left_budget, false);
      Regex right = Generate(budget - 1 - left_budget, false);
      if (choice == kCat) return Cat(left, right);
      if (choice == kAlt) return Or(left, right);
      return Shuffle(left, right);
    }
  }
}

Regex GenRegex(const GenConfig& config) {
  return RegexGenerator(config).Next();
}

namespace {

GoldenExample Example(std::string name, std::string_view expr,
                     std::string_view trace) {
  return {std::move(name), Parse(expr), MakeTrace(trace), {}, {}, {}, {},
          {},              {}};
}

}  // namespace

std::vector<GoldenExample> GoldenCorpus() {
  std::vector<GoldenExample> corpus;

  {
    GoldenExample ex = Example("derivative of ab+ac by a", "a b + a c", "a");
    ex.derivative = Parse("(eps b + 0 0) + (eps c + 0 0)");
    ex.frontier = Frontier{Parse("eps b"), Parse("eps c")};
    corpus.push_back(std::move(ex));
  }
  {
    GoldenExample ex = Example("derivative of ab+ac by b", "a b + a c", "b");
    ex.derivative = Parse("(0 b + 0 eps) + (0 c + 0 0)");
    ex.frontier = Frontier{};
    corpus.push_back(std::move(ex));
  }
  {
    GoldenExample ex = Example("height of a*b* along ab", "a* b*", "a b");
    ex.path = {Parse("a* b*"), Parse("(eps a*) b*"), Parse("eps b*")};
    ex.heights = {2, 3, 2};
    ex.frontier = Frontier{Parse("eps b*")};
    corpus.push_back(std::move(ex));
  }
  {
    GoldenExample ex = Example("height of a*b* along bb", "a* b*", "b b");
    ex.path = {Parse("a* b*"), Parse("eps b*"), Parse("eps b*")};
    ex.heights = {2, 2, 2};
    corpus.push_back(std::move(ex));
  }
  {
    GoldenExample ex = Example("size of a*** by a", "((a*)*)*", "a");
    ex.path = {Parse("((a*)*)*"), Parse("((eps a*) (a*)*) ((a*)*)*")};
    ex.sizes = {4, 13};
    corpus.push_back(std::move(ex));
  }
  {
    GoldenExample ex = Example("size of a(b*)* along ab", "a (b*)*", "a b");
    ex.path = {Parse("a (b*)*"), Parse("eps (b*)*"),
               Parse("(eps b*) (b*)*")};
    ex.sizes = {5, 5, 8};
    corpus.push_back(std::move(ex));
  }
  {
    GoldenExample ex =
        Example("shuffle of distinct symbols by a2", "a0 || a1", "a2");
    ex.derivative = Parse("(0 || a1) + (a0 || 0)");
    ex.frontier = Frontier{};
    corpus.push_back(std::move(ex));
  }
  {
    GoldenExample ex = Example("shuffle height counterexample along aba",
                              "(eps || a*) (b || a*)", "a b a");
    ex.path = {Parse("(eps || a*) (b || a*)"),
               Parse("(eps || eps a*) (b || a*)"), Parse("eps || a*"),
               Parse("eps || eps a*")};
    ex.heights = {3, 4, 2, 3};
    corpus.push_back(std::move(ex));
  }
  {
    GoldenExample ex = Example("shuffle size budget by a", "a* || b*", "a");
    ex.path = {Parse("a* || b*"), Parse("eps a* || b*")};
    ex.sizes = {5, 7};
    ex.eta_max = {4, 2};
    corpus.push_back(std::move(ex));
  }
  return corpus;
}

}  // namespace rederiv
