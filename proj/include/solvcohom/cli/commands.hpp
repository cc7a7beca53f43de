#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "solvcohom/cli/instance.hpp"

namespace solvcohom::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_invalid = 1,
  exit_parse = 2,
  exit_oracle_mismatch = 3,
};

struct Options {
  bool representatives = false;
};

struct CommandOutput {
  int exit_code = exit_ok;
  nlohmann::json machine;  // deterministic for a given instance
  std::string text;        // aligned tables for people
};

const std::vector<std::string>& command_names();

/// validate | derham | dolbeault | conditions | oracle | nilshadow.
/// Errors are turned into outputs with the matching exit code.
CommandOutput run_command(const std::string& command, const Instance& inst, const Options& opts = {});
CommandOutput run_command_on_file(const std::string& command, const std::filesystem::path& path,
                                  const Options& opts = {});

/// Pads columns to equal width; first row is the header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace solvcohom::cli
