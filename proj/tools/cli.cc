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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rederiv/automaton.h"
#include "rederiv/bounds.h"
#include "rederiv/derivative.h"
#include "rederiv/fuzz.h"
#include "rederiv/monitor.h"
#include "rederiv/oracle.h"
#include "rederiv/partial.h"
#include "rederiv/regex.h"

namespace rederiv {

namespace {

Trace JoinTrace(const std::vector<std::string>& parts) {
  std::string joined;
  for (const std::string& p : parts) joined += p + " ";
  std::istringstream in(joined);
  return ReadTrace(in);
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void PrintFrontier(const Frontier& frontier, std::ostream& out) {
  for (const Regex& e : frontier.SortedByText()) out << Format(e) << "\n";
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivatives and partial derivatives of regular expressions "
               "with shuffle, and a trace monitor built on them"};
  app.require_subcommand(1);

  std::string expr_text;
  std::vector<std::string> word;

  auto* format_cmd =
      app.add_subcommand("format", "Print the parsed expression");
  format_cmd->add_option("expr", expr_text)->required();

  auto* derive_cmd =
      app.add_subcommand("derive", "Print the Brzozowski derivative by a word");
  derive_cmd->add_option("expr", expr_text)->required();
  derive_cmd->add_option("word", word, "Symbols of the word");

  auto* pderive_cmd =
      app.add_subcommand("pderive", "Print the partial derivatives by a word");
  pderive_cmd->add_option("expr", expr_text)->required();
  pderive_cmd->add_option("word", word, "Symbols of the word");

  auto* closure_cmd = app.add_subcommand(
      "closure", "Print every partial derivative reachable from expr");
  closure_cmd->add_option("expr", expr_text)->required();

  bool bounds_trace = false;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Print metrics and increment budgets");
  bounds_cmd->add_flag("--trace", bounds_trace,
                       "Print a TSV row per frontier member along word");
  bounds_cmd->add_option("expr", expr_text)->required();
  bounds_cmd->add_option("word", word, "Symbols of the word");

  bool dot = false;
  auto* nfa_cmd = app.add_subcommand("nfa", "Print the partial-derivative NFA");
  nfa_cmd->add_flag("--dot", dot, "Graphviz output instead of JSON");
  nfa_cmd->add_option("expr", expr_text)->required();

  std::size_t max_len = 0;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Enumerate the words of expr up to a length");
  oracle_cmd->add_option("expr", expr_text)->required();
  oracle_cmd->add_option("max-len", max_len)->required();

  std::string spec_path;
  std::string trace_path = "-";
  std::string stats_path;
  bool per_step = false;
  auto* monitor_cmd =
      app.add_subcommand("monitor", "Check an event trace against a spec");
  monitor_cmd->add_option("spec-file", spec_path)->required();
  monitor_cmd->add_option("trace-file", trace_path,
                          "Trace file, or - for standard input");
  monitor_cmd->add_option("--stats", stats_path, "Write statistics as JSON");
  monitor_cmd->add_flag("--step", per_step, "Print a line per event");

  std::size_t count = 100;
  std::uint64_t seed = 1;
  bool shuffle = false;
  auto* fuzz_cmd = app.add_subcommand(
      "fuzz", "Cross-check all engines and bounds on random expressions");
  fuzz_cmd->add_option("--count", count);
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_flag("--shuffle", shuffle, "Generate shuffle nodes too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kErrorExit;
  }

  try {
    if (*format_cmd) {
      out << Format(Parse(expr_text)) << "\n";
    } else if (*derive_cmd) {
      out << Format(DeriveWord(Parse(expr_text), JoinTrace(word))) << "\n";
    } else if (*pderive_cmd) {
      PrintFrontier(PartialDerivativesWord(Parse(expr_text), JoinTrace(word)),
                    out);
    } else if (*closure_cmd) {
      const std::set<Regex> states = Closure(Parse(expr_text));
      Frontier all;
      for (const Regex& s : states) all.insert(s);
      PrintFrontier(all, out);
      out << "states: " << states.size() << "\n";
    } else if (*bounds_cmd) {
      const Regex e = Parse(expr_text);
      if (!bounds_trace) {
        out << "height\t" << Height(e) << "\n"
            << "size\t" << Size(e) << "\n"
            << "deltaMax\t" << DeltaMax(e) << "\n"
            << "etaMax\t" << EtaMax(e) << "\n";
      } else {
        out << "step\tsymbol\theight\tsize\tdeltaMax\tetaMax\theightBudget\t"
               "sizeBudget\texpr\n";
        for (const BoundsTraceRow& r : BoundsTrace(e, JoinTrace(word))) {
          out << r.step << "\t" << (r.symbol ? r.symbol->name() : "-") << "\t"
              << r.height << "\t" << r.size << "\t" << r.delta_max << "\t"
              << r.eta_max << "\t" << r.height_budget << "\t"
              << r.size_budget << "\t" << Format(r.expr) << "\n";
        }
      }
    } else if (*nfa_cmd) {
      const Nfa nfa = BuildNfa(Parse(expr_text));
      if (dot) {
        out << NfaToDot(nfa);
      } else {
        out << NfaToJson(nfa) << "\n";
      }
    } else if (*oracle_cmd) {
      const BoundedLanguage lang = LangUpTo(Parse(expr_text), max_len);
      std::vector<Trace> words(lang.words.begin(), lang.words.end());
      std::stable_sort(words.begin(), words.end(),
                       [](const Trace& a, const Trace& b) {
                         return a.size() < b.size();
                       });
      for (const Trace& w : words) out << FormatTrace(w) << "\n";
    } else if (*monitor_cmd) {
      const Regex spec = Parse(ReadFile(spec_path));
      Trace trace;
      if (trace_path == "-") {
        trace = ReadTrace(in);
      } else {
        std::ifstream file(trace_path);
        if (!file) throw std::runtime_error("cannot open " + trace_path);
        trace = ReadTrace(file);
      }
      MonitorSession session(spec);
      for (std::size_t i = 0; i < trace.size(); ++i) {
        session.Step(trace[i]);
        if (per_step) {
          out << i + 1 << " " << trace[i].name() << " "
              << VerdictName(session.CurrentVerdict()) << " "
              << session.frontier().size() << "\n";
        }
      }
      const RunResult result{session.CurrentVerdict(), StatsOf(session)};
      out << VerdictName(result.verdict) << "\n";
      if (!stats_path.empty()) {
        std::ofstream stats(stats_path);
        if (!stats) throw std::runtime_error("cannot write " + stats_path);
        stats << StatsToJson(result) << "\n";
      }
      return ExitCodeOf(result.verdict);
    } else if (*fuzz_cmd) {
      const FuzzSummary summary = RunFuzz(count, seed, shuffle);
      out << "checked " << summary.checked << " expressions, "
          << summary.failures << " failures\n";
      if (summary.counterexample) {
        out << "counterexample: " << Format(*summary.counterexample) << "\n"
            << "reason: " << summary.reason << "\n";
        return 1;
      }
      out << "PASS\n";
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kErrorExit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kErrorExit;
  }
  return 0;
}

}  // namespace rederiv
