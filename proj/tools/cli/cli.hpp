// Copyright 2026 The QVC Authors
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

namespace qvc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `qvc` invocation. `args` excludes the program name. Results go
/// to `out`, diagnostics to `err`; the return value is the process exit
/// code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Expands `--config <json>`: every key of the JSON object becomes a
/// `--key value...` flag unless the same flag already appears in `args`.
/// Underscores in keys map to dashes. Throws UsageError on unreadable or
/// non-object documents.
std::vector<std::string> merge_config_args(std::vector<std::string> args);

}  // namespace qvc::cli
