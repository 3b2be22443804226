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

#include "rederiv/monitor.h"

#include <sstream>

#include <gtest/gtest.h>

namespace rederiv {
namespace {

const Regex kFd = Parse("o1 a1 c1 || o2 a2 c2");

TEST(Verdict, Names) {
  EXPECT_EQ(VerdictName(Verdict::kAccepting), "ACCEPTING");
  EXPECT_EQ(VerdictName(Verdict::kPending), "PENDING");
  EXPECT_EQ(VerdictName(Verdict::kViolation), "VIOLATION");
  EXPECT_EQ(ExitCodeOf(Verdict::kAccepting), 0);
  EXPECT_EQ(ExitCodeOf(Verdict::kPending), 1);
  EXPECT_EQ(ExitCodeOf(Verdict::kViolation), 2);
}

TEST(VerdictOf, Frontiers) {
  EXPECT_EQ(VerdictOf(Frontier{}), Verdict::kViolation);
  EXPECT_EQ(VerdictOf(Frontier{Parse("a"), Parse("b*")}),
            Verdict::kAccepting);
  EXPECT_EQ(VerdictOf(Frontier{Parse("a")}), Verdict::kPending);
}

TEST(RunTrace, FileDescriptors) {
  EXPECT_EQ(RunTrace(kFd, MakeTrace("o1 o2 a1 a2 c2 c1")).verdict,
            Verdict::kAccepting);
  EXPECT_EQ(RunTrace(kFd, MakeTrace("o1 a1")).verdict, Verdict::kPending);
  EXPECT_EQ(RunTrace(kFd, {}).verdict, Verdict::kPending);
  const RunResult bad = RunTrace(kFd, MakeTrace("o1 c1 a1"));
  EXPECT_EQ(bad.verdict, Verdict::kViolation);
  EXPECT_EQ(bad.stats.violation_at, 2u);
}

TEST(RunTrace, ExampleWalks) {
  EXPECT_EQ(RunTrace(Parse("a* b*"), MakeTrace("a b")).verdict,
            Verdict::kAccepting);
  EXPECT_EQ(RunTrace(Parse("a b + a c"), MakeTrace("b")).verdict,
            Verdict::kViolation);
  EXPECT_EQ(RunTrace(Parse("a0 || a1"), MakeTrace("a2")).verdict,
            Verdict::kViolation);
}

TEST(MonitorSession, ViolationIsAbsorbing) {
  MonitorSession session(kFd);
  session.Step(Symbol("c1"));
  EXPECT_EQ(session.CurrentVerdict(), Verdict::kViolation);
  EXPECT_EQ(session.violation_at(), 1u);
  for (const char* ev : {"o1", "a1", "c1", "o2", "a2", "c2"}) {
    session.Step(Symbol(ev));
    EXPECT_EQ(session.CurrentVerdict(), Verdict::kViolation);
  }
  EXPECT_EQ(session.events_seen(), 7u);
  EXPECT_EQ(session.violation_at(), 1u);
}

TEST(MonitorSession, AdvancedLeavesOriginal) {
  const MonitorSession session(kFd);
  const MonitorSession next = session.Advanced(Symbol("o1"));
  EXPECT_EQ(session.events_seen(), 0u);
  EXPECT_EQ(next.events_seen(), 1u);
  EXPECT_EQ(session.frontier(), Frontier{kFd});
}

TEST(MonitorSession, StatsStayWithinBudget) {
  MonitorSession session(kFd);
  EXPECT_EQ(session.size_budget(), 11u + 121u);
  EXPECT_EQ(session.height_budget(), Height(kFd) + 1);
  for (const Symbol& ev : MakeTrace("o2 o1 a1 a2 c1 c2")) {
    session.Step(ev);
    EXPECT_LE(session.max_size_seen(), session.size_budget());
    EXPECT_LE(session.max_height_seen(), session.height_budget());
  }
  EXPECT_EQ(session.CurrentVerdict(), Verdict::kAccepting);
  EXPECT_EQ(session.frontier_history().size(), 7u);
  EXPECT_EQ(session.frontier_history().front(), 1u);
}

TEST(StatsToJson, Keys) {
  const std::string json = StatsToJson(RunTrace(kFd, MakeTrace("o1 a1")));
  EXPECT_EQ(json,
            R"({"events":2,"verdict":"PENDING","maxSize":11,"maxHeight":3,)"
            R"("sizeBudget":132,"heightBudget":4,"frontierHistory":[1,1,1]})");
}

TEST(ReadTrace, Tokens) {
  std::istringstream in("o1 a1\n\n  c1\t o2\n");
  EXPECT_EQ(ReadTrace(in), MakeTrace("o1 a1 c1 o2"));
  std::istringstream empty("");
  EXPECT_TRUE(ReadTrace(empty).empty());
}

TEST(ReadTrace, InvalidToken) {
  std::istringstream in("o1\n  a-1\n");
  try {
    ReadTrace(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  std::istringstream eps("eps");
  EXPECT_THROW(ReadTrace(eps), ParseError);
}

}  // namespace
}  // namespace rederiv
