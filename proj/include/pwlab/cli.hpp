// Copyright 2026 The pwlab Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pwlab {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kExitPositive = 0,
  kExitNegative = 1,
  kExitBudget = 2,
  kExitUsage = 64,
  kExitParse = 65,
};

int run_cli(int argc, char** argv);
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pwlab
