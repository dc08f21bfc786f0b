// Copyright 2026 The wtgc Authors.
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

#ifndef WTGC_TOOLS_CLI_HPP
#define WTGC_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace wtgc::cli {

inline constexpr std::size_t kOracleSizeCap = 12;

enum ExitCode : int { kOk = 0, kNegative = 1, kFailure = 2 };

/// Runs one command.  `args` excludes the program name.  Returns 0 on
/// success, 1 for a negative verdict or a failed oracle comparison, 2 for
/// usage, parse and precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtgc::cli

#endif  // WTGC_TOOLS_CLI_HPP
