// Copyright 2026 The condham Authors
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


#ifndef CONDHAM_TOOLS_COMMANDS_H
#define CONDHAM_TOOLS_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace condham::cli {

enum ExitCode : int {
    kOk = 0,
    kInvariantFailure = 1,
    kUsageError = 2,
    kNumericFailure = 3,
};

/// Runs one command line (without the program name). Output files are only
/// written once every artifact of the run has been produced.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace condham::cli

#endif
