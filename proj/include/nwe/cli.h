// Copyright 2026 The NWE Authors
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

#ifndef NWE_CLI_H
#define NWE_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace nwe::cli {

/// Process exit codes.
enum ExitCode : int {
    kCertified = 0,
    kNontrivial = 1,
    kParameterError = 2,
    kInvalidInput = 3,
    kIoError = 4,
};

/// Runs the command line `args` (without the program name). Documents and reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace nwe::cli

#endif
