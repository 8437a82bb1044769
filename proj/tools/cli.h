// Copyright 2026 The WikiTransfer Authors.
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


// Command-line front end. Kept apart from main() so tests can drive it
// in-process.

#ifndef WIKITRANSFER_TOOLS_CLI_H_
#define WIKITRANSFER_TOOLS_CLI_H_

#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace wikitransfer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBackend = 3;

inline constexpr char kWorkersEnv[] = "WIKITRANSFER_WORKERS";

// `args` excludes the program name. Diagnostics go to `err`.
int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

// --workers if given, else $WIKITRANSFER_WORKERS, else the number of
// hardware threads. Throws std::invalid_argument for a non-positive or
// unparsable environment value.
int ResolveWorkers(std::optional<int> flag);

}  // namespace wikitransfer::cli

#endif  // WIKITRANSFER_TOOLS_CLI_H_
