// Copyright 2026 ranklaw authors.
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

#ifndef RANKLAW_CLI_HPP_
#define RANKLAW_CLI_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace ranklaw {

/// Runs the command-line driver on already-split arguments (no program
/// name). Reads `in` when --input is `-`, writes results to `out` and
/// diagnostics to `err`.
///
/// Exit codes: 0 success, 1 usage error, 2 data/parse error, 3 fit failure
/// (insufficient or degenerate data). Every error path prints a single
/// line prefixed `error:` to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace ranklaw

#endif  // RANKLAW_CLI_HPP_
