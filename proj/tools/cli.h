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

#ifndef REDERIV_TOOLS_CLI_H_
#define REDERIV_TOOLS_CLI_H_

#include <iosfwd>

namespace rederiv {

// Exit status used for usage, parse and I/O errors. Distinct from the
// monitor verdict codes 0, 1 and 2.
inline constexpr int kErrorExit = 3;

// Entry point of the rederiv command line tool; streams are injected so the
// subcommands can be driven from tests.
int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace rederiv

#endif  // REDERIV_TOOLS_CLI_H_
