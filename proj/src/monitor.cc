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

#include <algorithm>
#include <cctype>
#include <utility>

#include "json.hpp"

namespace rederiv {

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAccepting:
      return "ACCEPTING";
    case Verdict::kPending:
      return "PENDING";
    case Verdict::kViolation:
      return "VIOLATION";
  }
  return "PENDING";
}

Verdict VerdictOf(const Frontier& frontier) {
  if (frontier.empty()) return Verdict::kViolation;
  return AnyAccepting(frontier) ? Verdict::kAccepting : Verdict::kPending;
}

MonitorSession::MonitorSession(Regex spec)
    : spec_(std::move(spec)),
      frontier_{spec_},
      max_size_seen_(Size(spec_)),
      max_height_seen_(Height(spec_)),
      frontier_history_{1} {}

void MonitorSession::Step(const Symbol& event) {
  ++events_seen_;
  if (!frontier_.empty()) {
    frontier_ = rederiv::Step(frontier_, event);
    for (const Regex& e : frontier_) {
      max_size_seen_ = std::max(max_size_seen_, Size(e));
      max_height_seen_ = std::max(max_height_seen_, Height(e));
    }
    if (frontier_.empty()) violation_at_ = events_seen_;
  }
  frontier_history_.push_back(frontier_.size());
}

MonitorSession MonitorSession::Advanced(const Symbol& event) const {
  MonitorSession next = *this;
  next.Step(event);
  return next;
}

std::size_t MonitorSession::size_budget() const {
  const std::size_t n = Size(spec_);
  return n + n * n;
}

std::size_t MonitorSession::height_budget() const {
  return Height(spec_) + 1;
}

MonitorStats StatsOf(const MonitorSession& session) {
  return {session.events_seen(),     session.max_size_seen(),
          session.max_height_seen(), session.size_budget(),
          session.height_budget(),   session.frontier_history(),
          session.violation_at()};
}

RunResult RunTrace(const Regex& spec, const Trace& trace) {
  MonitorSession session(spec);
  for (const Symbol& event : trace) session.Step(event);
  return {session.CurrentVerdict(), StatsOf(session)};
}

std::string StatsToJson(const RunResult& result) {
  nlohmann::ordered_json j;
  j["events"] = result.stats.events;
  j["verdict"] = VerdictName(result.verdict);
  j["maxSize"] = result.stats.max_size;
  j["maxHeight"] = result.stats.max_height;
  j["sizeBudget"] = result.stats.size_budget;
  j["heightBudget"] = result.stats.height_budget;
  j["frontierHistory"] = result.stats.frontier_history;
  return j.dump();
}

Trace ReadTrace(std::istream& in) {
  Trace trace;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos])) != 0) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < line.size() &&
             std::isspace(static_cast<unsigned char>(line[end])) == 0) {
        ++end;
      }
      std::string token = line.substr(pos, end - pos);
      if (!Symbol::IsValidName(token)) {
        throw ParseError("invalid event '" + token + "'", line_no,
                         static_cast<int>(pos) + 1);
      }
      trace.emplace_back(std::move(token));
      pos = end;
    }
  }
  return trace;
}

int ExitCodeOf(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAccepting:
      return 0;
    case Verdict::kPending:
      return 1;
    case Verdict::kViolation:
      return 2;
  }
  return 1;
}

}  // namespace rederiv
