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

// Increment budgets for the height and size of partial derivatives.
//
// DeltaMax(e) bounds how much the height of any partial derivative of e (over
// any word) can exceed height(e); EtaMax(e) does the same for size. Both are
// defined so that a single step preserves
//
//   metric(e') + budget(e') <= metric(e) + budget(e),
//
// which folds over whole words. Since DeltaMax <= 1 and EtaMax <= size^2,
// every partial derivative satisfies height(e') <= height(e) + 1 and
// size(e') <= size(e) + size(e)^2.

#ifndef REDERIV_BOUNDS_H_
#define REDERIV_BOUNDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rederiv/regex.h"

namespace rederiv {

// 1 iff height(e0) >= height(e1).
int Geq(const Regex& e0, const Regex& e1);

int DeltaMax(const Regex& e);

// How EtaMax combines the budgets of the two operands of a shuffle. Only kSum
// is sound; kMax is kept so tests can show that the invariant breaks with it.
enum class ShuffleEtaRule { kSum, kMax };

std::int64_t EtaMax(const Regex& e, ShuffleEtaRule rule = ShuffleEtaRule::kSum);

// One partial-derivative step measured under a metric and its budget.
struct BoundReport {
  Regex expr;  // the derivative e'
  std::size_t metric_before = 0;
  std::size_t metric_after = 0;
  std::int64_t bound_before = 0;
  std::int64_t bound_after = 0;
  std::optional<Symbol> step_label;

  bool Holds() const {
    return static_cast<std::int64_t>(metric_after) + bound_after <=
           static_cast<std::int64_t>(metric_before) + bound_before;
  }
};

// One report per member of PartialDerivatives(e, a), measuring height and
// DeltaMax.
std::vector<BoundReport> CheckHeightInvariant(const Regex& e, const Symbol& a);

// One report per member of PartialDerivatives(e, a), measuring size and
// EtaMax.
std::vector<BoundReport> CheckSizeInvariant(
    const Regex& e, const Symbol& a,
    ShuffleEtaRule rule = ShuffleEtaRule::kSum);

// One row of a word walk: a member of the frontier reached after `step`
// symbols, with its metrics and the ceilings the word-level invariant gives
// for it relative to the starting expression e:
//   height_budget = height(e) + DeltaMax(e) - DeltaMax(member)
//   size_budget   = size(e) + EtaMax(e) - EtaMax(member)
struct BoundsTraceRow {
  std::size_t step = 0;
  std::optional<Symbol> symbol;  // empty for step 0
  Regex expr;
  std::size_t height = 0;
  std::size_t size = 0;
  int delta_max = 0;
  std::int64_t eta_max = 0;
  std::int64_t height_budget = 0;
  std::int64_t size_budget = 0;

  bool WithinBudget() const {
    return static_cast<std::int64_t>(height) <= height_budget &&
           static_cast<std::int64_t>(size) <= size_budget;
  }
};

// Walks the frontier of e along w. Members of each frontier are listed in
// formatted-text order.
std::vector<BoundsTraceRow> BoundsTrace(const Regex& e, const Trace& w);

// a under n-1 nested stars, so that its size is n.
Regex StarChain(std::size_t n);

// {observed, predicted} size of the only partial derivative of StarChain(n)
// under a, where predicted = n + (n^2 + n)/2 - 1. Requires n >= 2.
std::pair<std::size_t, std::size_t> StarChainGrowth(std::size_t n);

}  // namespace rederiv

#endif  // REDERIV_BOUNDS_H_
