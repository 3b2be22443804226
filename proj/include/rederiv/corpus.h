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

#ifndef REDERIV_CORPUS_H_
#define REDERIV_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rederiv/partial.h"
#include "rederiv/regex.h"

namespace rederiv {

// Relative weights of each constructor in generated trees.
struct ConstructorWeights {
  double empty = 0.25;
  double eps = 1.0;
  double sym = 4.0;
  double cat = 3.0;
  double alt = 2.0;
  double star = 1.5;
  double shuffle = 2.0;
};

struct GenConfig {
  std::size_t max_size = 15;
  std::size_t alphabet_size = 3;  // symbols a, b, c, ...
  bool shuffle_enabled = true;
  std::uint64_t seed = 1;
  ConstructorWeights weights;
  // Star weight is multiplied by this directly beneath another star.
  double nested_star_damping = 0.25;
};

// The first n symbols of a, b, ..., z, a1, b1, ...
std::vector<Symbol> Alphabet(std::size_t n);

// Deterministic stream of random expressions with size(e) <= max_size.
// The same config always yields the same sequence on a given platform.
class RegexGenerator {
 public:
  explicit RegexGenerator(GenConfig config);

  Regex Next();

  const GenConfig& config() const { return config_; }
  const std::vector<Symbol>& alphabet() const { return alphabet_; }

 private:
  Regex Generate(std::size_t budget, bool under_star);

  GenConfig config_;
  std::vector<Symbol> alphabet_;
  std::mt19937_64 rng_;
};

// The first expression of RegexGenerator(config).
Regex GenRegex(const GenConfig& config);

// A worked example with its known intermediate values. Fields that an
// example does not pin down are left empty.
struct GoldenExample {
  std::string name;
  Regex expr;
  Trace trace;
  // Expected DeriveWord(expr, trace), unsimplified.
  std::optional<Regex> derivative;
  // Expected PartialDerivativesWord(expr, trace), exactly.
  std::optional<Frontier> frontier;
  // One reduction: path[0] == expr and path[i] is a partial derivative of
  // path[i-1] by trace[i-1].
  std::vector<Regex> path;
  // Metrics along path, when stated.
  std::vector<std::size_t> heights;
  std::vector<std::size_t> sizes;
  std::vector<std::int64_t> eta_max;
};

std::vector<GoldenExample> GoldenCorpus();

}  // namespace rederiv

#endif  // REDERIV_CORPUS_H_
