#pragma once

#include <string>
#include <vector>

#include "torusbb/json_io.hpp"

namespace torusbb::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

struct CommandResult {
  int exit_code = kSuccess;
  /// Structured result, or {"error": {...}} for domain errors.
  json_io::Json payload;
  /// Human-readable rendering of the payload.
  std::string table;
  /// What the tool writes to stdout and stderr.
  std::string out;
  std::string err;
};

/// Runs one subcommand. `args` excludes the program name, e.g.
/// {"hilb", "cells", "-d", "2", "-w", "1,3", "--json"}.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace torusbb::cli
