// Copyright 2026 The ontokit Authors
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

namespace ontokit::cli {

/// Exit codes: 0 when every check in the report passes, 1 when a check
/// fails, 2 on usage, schema, IO or precondition errors.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// Runs one `ontokit` invocation. `args` excludes the program name. Reports
/// go to `out`, diagnostics to `err`. The default tolerance can be overridden
/// by the ONTOKIT_TOL environment variable or the --tol flag (the flag wins).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ontokit::cli
