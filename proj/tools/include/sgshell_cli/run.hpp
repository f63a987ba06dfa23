#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgshell_cli/run_config.hpp"

namespace sgshell::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitTask = 3,
  kExitStrict = 4,
};

struct RunOptions {
  bool strict = false;
  bool write_files = true;
  std::optional<std::string> out_dir;
  std::optional<int> quad;
  std::optional<std::uint64_t> seed;
};

/// A finished task. `csv` holds the point table, `edge_csv` the edge table
/// of the resultants task; empty strings mean no file is written.
struct RunResult {
  nlohmann::ordered_json report;
  std::string text;
  std::string csv;
  std::string edge_csv;
  std::vector<std::string> files;
};

/// Runs the configured task. Module failures are rethrown as TaskError,
/// invalid overrides as ConfigError, and with `strict` any regime warning
/// becomes a RegimeViolation.
RunResult run(RunConfig config, const RunOptions& options = {});

/// Maps an exception from run() to the process exit status.
int exit_code_for(const std::exception& e);

}  // namespace sgshell::cli
