// Copyright 2026 The Cybertopo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Kept as a library so tests can drive it in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cybertopo {

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 2,
  kExitInvalidArgument = 3,
  kExitInternalError = 4,
};

// `args` excludes the program name. Reports go to `out` unless --output
// names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cybertopo
