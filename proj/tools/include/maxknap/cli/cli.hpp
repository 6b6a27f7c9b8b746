// Copyright 2026 The maxknap Authors
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

#ifndef MAXKNAP_CLI_CLI_HPP_
#define MAXKNAP_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace maxknap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;     // parse or validation error
inline constexpr int kExitInternal = 3;  // overflow or internal check failure
inline constexpr int kExitVerify = 4;    // bench verification mismatch

// Runs one command line (without the program name). Results go to `out`, or
// to the --out file; diagnostics go to `err`. Subcommands: conv, knapsack,
// power, treesep, gen, bench. The KNAP_SEED environment variable supplies
// the seed when --seed is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxknap::cli

#endif  // MAXKNAP_CLI_CLI_HPP_
