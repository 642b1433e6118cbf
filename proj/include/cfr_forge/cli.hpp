// Copyright 2026 The cfr-forge Authors. All rights reserved.
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

#ifndef CFR_FORGE_CLI_HPP_
#define CFR_FORGE_CLI_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfr_forge/bench.hpp"

namespace cfr_forge {

// Bad command line. `exit_code` is 2 for usage errors.
class CliError : public std::runtime_error {
 public:
  CliError(const std::string& message, int exit_code)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct CliCommand {
  enum class Kind { kBench, kStats, kHelp };
  Kind kind = Kind::kHelp;
  BenchPlan plan;                 // kBench
  std::vector<GameSpec> games;    // kStats
  bool check_paper = false;       // kStats
  std::vector<std::string> notices;
  std::string help;               // kHelp
};

// `args` excludes the program name. Throws CliError.
CliCommand parse_cli(const std::vector<std::string>& args);

// Full front end: parses, runs and returns the process exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfr_forge

#endif  // CFR_FORGE_CLI_HPP_
