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

#include "rederiv/bounds.h"

#include <algorithm>
#include <stdexcept>

#include "rederiv/partial.h"

namespace rederiv {

int Geq(const Regex& e0, const Regex& e1) {
  return Height(e0) >= Height(e1) ? 1 : 0;
}

int DeltaMax(const Regex& e) {
  switch (e.kind()) {
    case Kind::kEmpty:
    case Kind::kEps:
    case Kind::kSym:
    case Kind::kOr:
      return 0;
    case Kind::kStar:
      return 1;
    case Kind::kCat:
      return Geq(e.left(), e.right()) * DeltaMax(e.left());
    case Kind::kShuffle:
      return std::max(Geq(e.left(), e.right()) * DeltaMax(e.left()),
                      Geq(e.right(), e.left()) * DeltaMax(e.right()));
  }
  return 0;
}

std::int64_t EtaMax(const Regex& e, ShuffleEtaRule rule) {
  const auto size = [](const Regex& x) {
    return static_cast<std::int64_t>(Size(x));
  };
  switch (e.kind()) {
    case Kind::kEmpty:
    case Kind::kEps:
    case Kind::kSym:
      return 0;
    case Kind::kCat:
      return std::max(EtaMax(e.left(), rule),
                      EtaMax(e.right(), rule) - size(e.left()) - 1);
    case Kind::kOr:
      return std::max({EtaMax(e.left(), rule) - size(e.right()) - 1,
                       EtaMax(e.right(), rule) - size(e.left()) - 1,
                       std::int64_t{0}});
    case Kind::kStar:
      return size(e.sub()) + EtaMax(e.sub(), rule) + 1;
    case Kind::kShuffle:
      if (rule == ShuffleEtaRule::kMax) {
        return std::max(EtaMax(e.left(), rule), EtaMax(e.right(), rule));
      }
      return EtaMax(e.left(), rule) + EtaMax(e.right(), rule);
  }
  return 0;
}

std::vector<BoundReport> CheckHeightInvariant(const Regex& e,
                                              const Symbol& a) {
  std::vector<BoundReport> reports;
  for (const Regex& d : PartialDerivatives(e, a)) {
    reports.push_back(
        {d, Height(e), Height(d), DeltaMax(e), DeltaMax(d), a});
  }
  return reports;
}

std::vector<BoundReport> CheckSizeInvariant(const Regex& e, const Symbol& a,
                                            ShuffleEtaRule rule) {
  std::vector<BoundReport> reports;
  for (const Regex& d : PartialDerivatives(e, a)) {
    reports.push_back(
        {d, Size(e), Size(d), EtaMax(e, rule), EtaMax(d, rule), a});
  }
  return reports;
}

std::vector<BoundsTraceRow> BoundsTrace(const Regex& e, const Trace& w) {
  const auto height0 = static_cast<std::int64_t>(Height(e));
  const auto size0 = static_cast<std::int64_t>(Size(e));
  const int delta0 = DeltaMax(e);
  const std::int64_t eta0 = EtaMax(e);
  std::vector<BoundsTraceRow> rows;
  const auto emit = [&](std::size_t step, std::optional<Symbol> symbol,
                        const Frontier& frontier) {
    for (const Regex& member : frontier.SortedByText()) {
      const int delta = DeltaMax(member);
      const std::int64_t eta = EtaMax(member);
      rows.push_back({step, symbol, member, Height(member), Size(member),
                      delta, eta, height0 + delta0 - delta,
                      size0 + eta0 - eta});
    }
  };
  Frontier frontier{e};
  emit(0, std::nullopt, frontier);
  for (std::size_t i = 0; i < w.size(); ++i) {
    frontier = Step(frontier, w[i]);
    emit(i + 1, w[i], frontier);
  }
  return rows;
}

Regex StarChain(std::size_t n) {
  if (n == 0) throw std::invalid_argument("star chain needs n >= 1");
  Regex e = Sym("a");
  for (std::size_t i = 1; i < n; ++i) e = Star(e);
  return e;
}

std::pair<std::size_t, std::size_t> StarChainGrowth(std::size_t n) {
  if (n < 2) throw std::invalid_argument("star chain growth needs n >= 2");
  const Regex e = StarChain(n);
  const Frontier derivatives = PartialDerivatives(e, Symbol("a"));
  if (derivatives.size() != 1) {
    throw std::logic_error("star chain has more than one partial derivative");
  }
  const std::size_t observed = Size(*derivatives.begin());
  const std::size_t predicted = Size(e) + (n * n + n) / 2 - 1;
  return {observed, predicted};
}

}  // namespace rederiv
