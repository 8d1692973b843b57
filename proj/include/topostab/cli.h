// Copyright 2026 The topostab Authors
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

#ifndef TOPOSTAB_CLI_H
#define TOPOSTAB_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace topostab {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

/// Runs the command line `args` (program name excluded). Machine records
/// go to `out` as tab-separated lines; human text goes to `err` unless
/// --format selects a single stream.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace topostab

#endif
