// Copyright 2026 The Qudit Deutsch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qudit::cli {

// Exit codes. Verdict codes are stable; usage/IO codes follow sysexits.h.
inline constexpr int kExitConstant = 0;
inline constexpr int kExitBalanced = 1;
inline constexpr int kExitPromiseViolated = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitSoftware = 70;
inline constexpr int kExitCantCreate = 73;
inline constexpr int kExitIoError = 74;

/// Distributions longer than this are summarized unless --full-distribution is given.
inline constexpr size_t kFullDistributionLimit = 64;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. A human-readable summary is added to `err`
/// when `err_is_terminal` is set and --json was not given.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, bool err_is_terminal = false);

}  // namespace qudit::cli
