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

#ifndef REDERIV_MONITOR_H_
#define REDERIV_MONITOR_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rederiv/partial.h"
#include "rederiv/regex.h"

namespace rederiv {

// Three-valued verdict on a trace prefix.
//   kAccepting: the prefix itself is in the language.
//   kPending:   the frontier is non-empty but nothing in it accepts. This
//               does not promise the trace can still be completed, e.g.
//               "a 0" after "a" stays pending forever.
//   kViolation: the frontier is empty; no extension can be accepted.
enum class Verdict { kAccepting, kPending, kViolation };

std::string_view VerdictName(Verdict verdict);

Verdict VerdictOf(const Frontier& frontier);

// Online monitor state: the partial-derivative frontier of the trace read so
// far, plus telemetry about the largest derivative seen. A session is a
// value; Step mutates it and Advanced returns a stepped copy. Calls on one
// session must not race.
class MonitorSession {
 public:
  explicit MonitorSession(Regex spec);

  void Step(const Symbol& event);
  MonitorSession Advanced(const Symbol& event) const;

  Verdict CurrentVerdict() const { return VerdictOf(frontier_); }

  const Regex& spec() const { return spec_; }
  const Frontier& frontier() const { return frontier_; }
  std::size_t events_seen() const { return events_seen_; }
  std::size_t max_size_seen() const { return max_size_seen_; }
  std::size_t max_height_seen() const { return max_height_seen_; }
  // Frontier cardinality before the first event and after each event.
  const std::vector<std::size_t>& frontier_history() const {
    return frontier_history_;
  }
  // 1-based index of the event that emptied the frontier.
  std::optional<std::size_t> violation_at() const { return violation_at_; }

  // size(spec) + size(spec)^2 and height(spec) + 1.
  std::size_t size_budget() const;
  std::size_t height_budget() const;

 private:
  Regex spec_;
  Frontier frontier_;
  std::size_t events_seen_ = 0;
  std::size_t max_size_seen_ = 0;
  std::size_t max_height_seen_ = 0;
  std::vector<std::size_t> frontier_history_;
  std::optional<std::size_t> violation_at_;
};

struct MonitorStats {
  std::size_t events = 0;
  std::size_t max_size = 0;
  std::size_t max_height = 0;
  std::size_t size_budget = 0;
  std::size_t height_budget = 0;
  std::vector<std::size_t> frontier_history;
  std::optional<std::size_t> violation_at;
};

struct RunResult {
  Verdict verdict;
  MonitorStats stats;
};

MonitorStats StatsOf(const MonitorSession& session);

RunResult RunTrace(const Regex& spec, const Trace& trace);

// {"events", "verdict", "maxSize", "maxHeight", "sizeBudget",
//  "heightBudget", "frontierHistory"}
std::string StatsToJson(const RunResult& result);

// Reads whitespace-separated event names. Any identifier is accepted, even
// one that does not occur in the specification. Throws ParseError on a
// malformed token.
Trace ReadTrace(std::istream& in);

// Process exit status for a verdict: 0 accepting, 1 pending, 2 violation.
int ExitCodeOf(Verdict verdict);

}  // namespace rederiv

#endif  // REDERIV_MONITOR_H_
