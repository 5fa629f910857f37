// Copyright 2026 The Realz Authors
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
#ifndef REALZ_CLI_COMMANDS_HPP_
#define REALZ_CLI_COMMANDS_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "realz_cli/io.hpp"

namespace realz::cli {

enum ExitCode : int { kExitOk = 0, kExitError = 2, kExitNegative = 3 };

struct Flags {
  double tolerance = 1e-9;
  bool rational = false;
  std::string pivot = "bland";
  std::optional<int> cap_override;
  std::optional<std::string> group;   // "5", "2x2" or "trivial"
  std::optional<std::string> family;  // see parse_families
};

struct CommandResult {
  int exit_code = kExitError;
  Json report;
};

CommandResult cmd_check(const std::filesystem::path& instance, const Flags& flags);
CommandResult cmd_conditions(const std::filesystem::path& instance, const Flags& flags);
CommandResult cmd_third_moment(const std::filesystem::path& instance, const Flags& flags);
CommandResult cmd_stationary(const std::filesystem::path& instance, const Flags& flags);
CommandResult cmd_certify(const std::filesystem::path& instance,
                          const std::filesystem::path& certificate, const Flags& flags);

// Full command line, as seen by main. Reports go to out (or --out),
// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace realz::cli

#endif  // REALZ_CLI_COMMANDS_HPP_
