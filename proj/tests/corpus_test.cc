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

#include <gtest/gtest.h>

#include "rederiv/bounds.h"
#include "rederiv/derivative.h"
#include "rederiv/partial.h"

namespace rederiv {
namespace {

TEST(Alphabet, Names) {
  const auto symbols = Alphabet(3);
  ASSERT_EQ(symbols.size(), 3u);
  EXPECT_EQ(symbols[0].name(), "a");
  EXPECT_EQ(symbols[2].name(), "c");
}

TEST(RegexGenerator, DeterministicPerSeed) {
  GenConfig config;
  config.seed = 42;
  RegexGenerator first(config), second(config);
  for (int i = 0; i < 200; ++i) ASSERT_EQ(first.Next(), second.Next());
  EXPECT_EQ(GenRegex(config), GenRegex(config));
}

TEST(RegexGenerator, SeedsDiffer) {
  GenConfig one, two;
  two.seed = 2;
  RegexGenerator first(one), second(two);
  int differences = 0;
  for (int i = 0; i < 50; ++i) differences += first.Next() != second.Next();
  EXPECT_GT(differences, 0);
}

TEST(RegexGenerator, RespectsConfig) {
  GenConfig config;
  config.shuffle_enabled = false;
  config.max_size = 9;
  config.alphabet_size = 2;
  RegexGenerator gen(config);
  bool saw_star = false;
  for (int i = 0; i < 2000; ++i) {
    const Regex e = gen.Next();
    ASSERT_LE(Size(e), 9u);
    ASSERT_TRUE(IsShuffleFree(e)) << Format(e);
    for (const Symbol& s : SymbolsOf(e)) {
      ASSERT_TRUE(s.name() == "a" || s.name() == "b");
    }
    saw_star |= e.kind() == Kind::kStar;
  }
  EXPECT_TRUE(saw_star);
}

TEST(RegexGenerator, ProducesShuffles) {
  RegexGenerator gen(GenConfig{});
  int shuffles = 0;
  for (int i = 0; i < 500; ++i) shuffles += !IsShuffleFree(gen.Next());
  EXPECT_GT(shuffles, 50);
}

TEST(GoldenCorpus, Goldens) {
  const auto corpus = GoldenCorpus();
  ASSERT_EQ(corpus.size(), 9u);
  for (const GoldenExample& ex : corpus) {
    SCOPED_TRACE(ex.name);
    if (ex.derivative) {
      EXPECT_EQ(DeriveWord(ex.expr, ex.trace), *ex.derivative);
    }
    if (ex.frontier) {
      EXPECT_EQ(PartialDerivativesWord(ex.expr, ex.trace), *ex.frontier);
    }
    if (!ex.path.empty()) {
      ASSERT_EQ(ex.path.size(), ex.trace.size() + 1);
      EXPECT_EQ(ex.path.front(), ex.expr);
      for (std::size_t i = 0; i < ex.trace.size(); ++i) {
        const Frontier step = PartialDerivatives(ex.path[i], ex.trace[i]);
        EXPECT_TRUE(step.contains(ex.path[i + 1]))
            << Format(ex.path[i]) << " -> " << Format(ex.path[i + 1]);
      }
    }
    for (std::size_t i = 0; i < ex.heights.size(); ++i) {
      EXPECT_EQ(Height(ex.path[i]), ex.heights[i]) << Format(ex.path[i]);
    }
    for (std::size_t i = 0; i < ex.sizes.size(); ++i) {
      EXPECT_EQ(Size(ex.path[i]), ex.sizes[i]) << Format(ex.path[i]);
    }
    for (std::size_t i = 0; i < ex.eta_max.size(); ++i) {
      EXPECT_EQ(EtaMax(ex.path[i]), ex.eta_max[i]) << Format(ex.path[i]);
    }
  }
}

}  // namespace
}  // namespace rederiv
