// Copyright 2026 The drs Authors
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

#ifndef DRS_TOOLS_CLI_H_
#define DRS_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace drs::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // also parse errors and bad indices
inline constexpr int kExitDisconnected = 2;
inline constexpr int kExitOverCap = 3;
inline constexpr int kExitNotResolving = 4;
inline constexpr int kExitNotApplicable = 5;
inline constexpr int kExitConformanceFailure = 6;

// Runs one invocation. `args` excludes the program name. Reports go to
// `out`; diagnostics go to `err` and nothing is written to `out` on
// errors that produce no report.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace drs::cli

#endif  // DRS_TOOLS_CLI_H_
