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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rederiv/automaton.h"
#include "rederiv/bounds.h"
#include "rederiv/corpus.h"
#include "rederiv/derivative.h"
#include "rederiv/monitor.h"
#include "rederiv/oracle.h"
#include "rederiv/partial.h"
#include "rederiv/regex.h"

namespace rederiv {
namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

bool Report(int id, const std::string& title,
            const std::function<std::string(Check&)>& body,
            double time_limit_s) {
  Check check;
  const auto start = Clock::now();
  std::string detail;
  try {
    detail = body(check);
  } catch (const std::exception& e) {
    check.Expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream timing;
  timing.precision(3);
  timing << std::fixed << elapsed << "s";
  if (elapsed > time_limit_s) {
    check.Expect(false, "time " + timing.str() + " over limit");
  }
  const bool pass = check.failures() == 0;
  std::printf("[%s] criterion %d: %s (%s; %s)\n", pass ? "PASS" : "FAIL", id,
              title.c_str(), detail.c_str(), timing.str().c_str());
  for (const std::string& m : check.messages()) {
    std::printf("    %s\n", m.c_str());
  }
  std::fflush(stdout);
  return pass;
}

std::string Pair(const Regex& e, const Regex& got) {
  return Format(e) + " -> " + Format(got);
}

std::string Criterion1(Check& c) {
  const Symbol a("a"), b("b");
  const Regex abac = Parse("a b + a c");
  c.Expect(Derive(abac, a) == Parse("(eps b + 0 0) + (eps c + 0 0)"),
           Pair(abac, Derive(abac, a)));
  c.Expect(Derive(abac, b) == Parse("(0 b + 0 eps) + (0 c + 0 0)"),
           Pair(abac, Derive(abac, b)));
  c.Expect(PartialDerivatives(abac, a) ==
               Frontier{Parse("eps b"), Parse("eps c")},
           "frontier of ab+ac by a");

  const Regex ab_star = Parse("a* b*");
  const Regex after_a = Parse("(eps a*) b*");
  const Regex after_ab = Parse("eps b*");
  c.Expect(PartialDerivatives(ab_star, a) == Frontier{after_a}, "a* b* by a");
  c.Expect(PartialDerivatives(after_a, b).contains(after_ab),
           "(eps a*) b* by b");
  c.Expect(Height(ab_star) == 2 && Height(after_a) == 3 &&
               Height(after_ab) == 2,
           "heights 2,3,2");

  const Regex chain = Parse("((a*)*)*");
  const Frontier chain_step = PartialDerivatives(chain, a);
  c.Expect(chain_step.size() == 1 && Size(chain) == 4 &&
               Size(*chain_step.begin()) == 13,
           "star chain 4 -> 13");
  const Regex ab2 = Parse("a (b*)*");
  const Regex ab2_a = Parse("eps (b*)*");
  const Regex ab2_ab = Parse("(eps b*) (b*)*");
  c.Expect(PartialDerivatives(ab2, a).contains(ab2_a) &&
               PartialDerivatives(ab2_a, b).contains(ab2_ab),
           "a (b*)* walk");
  c.Expect(Size(ab2) == 5 && Size(ab2_a) == 5 && Size(ab2_ab) == 8,
           "sizes 5,5,8");

  const Regex a01 = Parse("a0 || a1");
  const Regex d = Derive(a01, Symbol("a2"));
  c.Expect(d == Parse("(0 || a1) + (a0 || 0)"), Pair(a01, d));
  c.Expect(HasEps(d) == EpsFlag::kZero, "hasEps of shuffle derivative");
  c.Expect(PartialDerivatives(a01, Symbol("a2")).empty(), "empty frontier");

  const Regex counter = Parse("(eps || a*) (b || a*)");
  c.Expect(PartialDerivativesWord(counter, MakeTrace("a b a"))
               .contains(Parse("eps || eps a*")),
           "aba reaches eps || eps a*");

  const Regex sh = Parse("a* || b*");
  const Regex sh_a = Parse("eps a* || b*");
  c.Expect(PartialDerivatives(sh, a) == Frontier{sh_a}, "a* || b* by a");
  c.Expect(Size(sh) == 5 && Size(sh_a) == 7, "sizes 5 -> 7");
  c.Expect(EtaMax(sh) == 4 && EtaMax(sh_a) == 2, "etaMax 4 -> 2");
  bool sum_holds = true, max_holds = true;
  for (const auto& r : CheckSizeInvariant(sh, a)) sum_holds &= r.Holds();
  for (const auto& r : CheckSizeInvariant(sh, a, ShuffleEtaRule::kMax)) {
    max_holds &= r.Holds();
  }
  c.Expect(sum_holds, "sum rule invariant");
  c.Expect(!max_holds, "max rule should break the invariant");

  std::size_t checked = 0;
  for (const GoldenExample& ex : GoldenCorpus()) {
    ++checked;
    if (ex.derivative) {
      c.Expect(DeriveWord(ex.expr, ex.trace) == *ex.derivative, ex.name);
    }
    if (ex.frontier) {
      c.Expect(PartialDerivativesWord(ex.expr, ex.trace) == *ex.frontier,
               ex.name);
    }
    for (std::size_t i = 0; i + 1 < ex.path.size(); ++i) {
      c.Expect(PartialDerivatives(ex.path[i], ex.trace[i])
                   .contains(ex.path[i + 1]),
               ex.name);
    }
    for (std::size_t i = 0; i < ex.heights.size(); ++i) {
      c.Expect(Height(ex.path[i]) == ex.heights[i], ex.name);
    }
    for (std::size_t i = 0; i < ex.sizes.size(); ++i) {
      c.Expect(Size(ex.path[i]) == ex.sizes[i], ex.name);
    }
    for (std::size_t i = 0; i < ex.eta_max.size(); ++i) {
      c.Expect(EtaMax(ex.path[i]) == ex.eta_max[i], ex.name);
    }
  }
  return std::to_string(checked) + " corpus entries";
}

std::string Criterion2(Check& c) {
  GenConfig config;
  config.seed = 2024;
  RegexGenerator gen(config);
  const auto words = AllWords(gen.alphabet(), 4);
  const int kCount = 2000;
  std::size_t comparisons = 0;
  for (int i = 0; i < kCount; ++i) {
    const Regex e = gen.Next();
    const BoundedLanguage lang = LangUpTo(e, 4);
    const Nfa nfa = BuildNfa(e);
    for (const Trace& w : words) {
      const bool oracle = lang.contains(w);
      const bool ok = AcceptsByDerivative(e, w) == oracle &&
                      AcceptsByPartial(e, w) == oracle &&
                      NfaAccepts(nfa, w) == oracle;
      c.Expect(ok, Format(e) + " on '" + FormatTrace(w) + "'");
      ++comparisons;
    }
  }
  return std::to_string(kCount) + " expressions, " +
         std::to_string(comparisons) + " words";
}

std::string Criterion3(Check& c) {
  GenConfig config;
  config.seed = 3033;
  RegexGenerator gen(config);
  const int kCount = 500;
  for (int i = 0; i < kCount; ++i) {
    const Regex e = gen.Next();
    for (const Symbol& s : gen.alphabet()) {
      WordSet combined;
      for (const Regex& m : PartialDerivatives(e, s)) {
        combined.merge(LangUpTo(m, 3).words);
      }
      c.Expect(combined == LangUpTo(Derive(e, s), 3).words,
               Format(e) + " by " + s.name());
    }
  }
  return std::to_string(kCount) + " expressions";
}

std::string Criterion4(Check& c) {
  GenConfig config;
  config.seed = 4044;
  RegexGenerator gen(config);
  const int kCount = 5000;
  const std::size_t kDepth = 6;
  std::size_t steps = 0;
  for (int i = 0; i < kCount; ++i) {
    const Regex e = gen.Next();
    const auto size = static_cast<std::int64_t>(Size(e));
    const int delta = DeltaMax(e);
    const std::int64_t eta = EtaMax(e);
    c.Expect(delta >= 0 && delta <= 1, "DeltaMax range: " + Format(e));
    c.Expect(eta >= 0 && eta <= size * size, "EtaMax range: " + Format(e));
    // Every reachable partial derivative by a word of length <= kDepth.
    std::set<Regex> seen{e};
    std::vector<Regex> layer{e};
    for (std::size_t d = 0; d < kDepth && !layer.empty(); ++d) {
      std::vector<Regex> next;
      for (const Regex& x : layer) {
        const auto hx = static_cast<std::int64_t>(Height(x));
        const auto sx = static_cast<std::int64_t>(Size(x));
        for (const Symbol& s : gen.alphabet()) {
          for (const Regex& y : PartialDerivatives(x, s)) {
            ++steps;
            const auto hy = static_cast<std::int64_t>(Height(y));
            const auto sy = static_cast<std::int64_t>(Size(y));
            c.Expect(hy + DeltaMax(y) <= hx + DeltaMax(x),
                     "height invariant: " + Pair(x, y));
            c.Expect(sy + EtaMax(y) <= sx + EtaMax(x),
                     "size invariant: " + Pair(x, y));
            c.Expect(Height(y) <= Height(e) + 1,
                     "height corollary: " + Pair(e, y));
            c.Expect(sy <= size + size * size,
                     "size corollary: " + Pair(e, y));
            if (seen.insert(y).second) next.push_back(y);
          }
        }
      }
      layer = std::move(next);
    }
  }
  return std::to_string(kCount) + " expressions, " + std::to_string(steps) +
         " steps";
}

std::string Criterion5(Check& c) {
  GenConfig config;
  config.seed = 5055;
  config.shuffle_enabled = false;
  RegexGenerator gen(config);
  const int kCount = 2000;
  for (int i = 0; i < kCount; ++i) {
    const Regex e = gen.Next();
    c.Expect(IsShuffleFree(e), "generator produced a shuffle");
    const std::set<Regex> closure = Closure(e);
    c.Expect(closure.size() <= Size(e) + 1, "closure size: " + Format(e));
    for (const Regex& x : closure) {
      for (const Symbol& s : gen.alphabet()) {
        for (const Regex& y : PartialDerivatives(x, s)) {
          c.Expect(DeltaMax(y) == 0, "DeltaMax not zero: " + Pair(x, y));
        }
      }
    }
  }
  return std::to_string(kCount) + " shuffle-free expressions";
}

std::string Criterion6(Check& c) {
  std::string detail;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto [observed, predicted] = StarChainGrowth(n);
    c.Expect(observed == predicted, "n=" + std::to_string(n));
    detail += (detail.empty() ? "" : " ") + std::to_string(observed);
  }
  return "sizes " + detail;
}

std::string Criterion7(Check& c) {
  const std::vector<std::size_t> expected = {4, 16, 64, 256};
  std::string detail;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t states = StateGrowthBench(n);
    c.Expect(states == expected[n - 1], "n=" + std::to_string(n) + " gave " +
                                            std::to_string(states));
    const Regex spec = FileDescriptorSpec(n);
    const std::set<Regex> closure = Closure(spec);
    c.Expect(closure.size() == states, "closure disagrees with bench");
    const std::size_t s = Size(spec);
    std::size_t largest = 0;
    for (const Regex& x : closure) largest = std::max(largest, Size(x));
    c.Expect(largest <= s + s * s, "state too large for n=" +
                                       std::to_string(n));
    detail += (detail.empty() ? "" : " ") + std::to_string(states);
  }
  return "states " + detail;
}

std::string Criterion8(Check& c) {
  const Regex spec = Parse("o1 a1 c1 || o2 a2 c2");
  const BoundedLanguage lang = LangUpTo(spec, 6);
  std::mt19937_64 rng(8088);
  const Trace left = MakeTrace("o1 a1 c1"), right = MakeTrace("o2 a2 c2");

  const auto check_budgets = [&](const Trace& t) {
    MonitorSession session(spec);
    for (const Symbol& ev : t) {
      session.Step(ev);
      c.Expect(session.max_size_seen() <= session.size_budget() &&
                   session.max_height_seen() <= session.height_budget(),
               "budget exceeded on '" + FormatTrace(t) + "'");
    }
    return session.CurrentVerdict();
  };
  // Whether some word of the language extends t.
  const auto has_extension = [&](const Trace& t) {
    for (const Trace& w : lang.words) {
      if (w.size() >= t.size() && std::equal(t.begin(), t.end(), w.begin())) {
        return true;
      }
    }
    return false;
  };

  std::size_t accepted = 0, rejected = 0;
  for (int i = 0; i < 100; ++i) {
    // Random interleaving: pick which side each position draws from.
    std::vector<int> sides = {0, 0, 0, 1, 1, 1};
    std::shuffle(sides.begin(), sides.end(), rng);
    Trace t;
    std::size_t li = 0, ri = 0;
    for (int side : sides) t.push_back(side == 0 ? left[li++] : right[ri++]);
    c.Expect(lang.contains(t), "generated trace not valid");
    const Verdict v = check_budgets(t);
    c.Expect(v == Verdict::kAccepting, "valid '" + FormatTrace(t) + "'");
    accepted += v == Verdict::kAccepting;

    Trace mutated = t;
    if (rng() % 2 == 0) {
      mutated.erase(mutated.begin() + static_cast<long>(rng() % 6));
    } else {
      std::size_t j = rng() % 5;
      while (mutated[j] == mutated[j + 1]) j = (j + 1) % 5;
      std::swap(mutated[j], mutated[j + 1]);
    }
    const Verdict mv = check_budgets(mutated);
    const bool member = lang.contains(mutated);
    const Verdict expected = member                   ? Verdict::kAccepting
                             : has_extension(mutated) ? Verdict::kPending
                                                      : Verdict::kViolation;
    c.Expect(mv == expected, "mutated '" + FormatTrace(mutated) + "' got " +
                                 std::string(VerdictName(mv)));
    rejected += mv != Verdict::kAccepting;
  }
  return std::to_string(accepted) + " valid accepted, " +
         std::to_string(rejected) + " of 100 mutated not accepted";
}

}  // namespace
}  // namespace rederiv

int main() {
  using namespace rederiv;
  bool ok = true;
  ok &= Report(1, "golden examples", Criterion1, 1.0);
  ok &= Report(2, "oracle = derivative = partial = NFA", Criterion2, 120.0);
  ok &= Report(3, "partial derivatives decompose the derivative",
               Criterion3, 120.0);
  ok &= Report(4, "height and size bound lemmas", Criterion4, 300.0);
  ok &= Report(5, "shuffle-free strengthenings", Criterion5, 120.0);
  ok &= Report(6, "star-chain growth formula", Criterion6, 10.0);
  ok &= Report(7, "NFA state growth with quadratic states", Criterion7, 30.0);
  ok &= Report(8, "monitor on file-descriptor traces", Criterion8, 10.0);
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
