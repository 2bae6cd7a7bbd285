// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pearlsat::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kSat = 10,
  kUnsat = 20,
};

/// Runs `pearlsat <args...>` (args excludes the program name) with the
/// given streams and returns the exit code. Never throws.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace pearlsat::cli
