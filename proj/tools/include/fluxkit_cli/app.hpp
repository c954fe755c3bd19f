#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fluxkit::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kSchemaError = 2 };

struct Options {
  std::optional<double> tolerance;
  std::optional<unsigned long long> seed;
};

struct RunResult {
  int exit_code = kPass;
  nlohmann::json report;
};

/// Subcommands accepted by run_command, in display order.
const std::vector<std::string>& subcommands();

/// Runs one subcommand on a parsed scenario. Never throws: schema problems
/// give exit 2, failed checks exit 1 with `first_failure` set.
RunResult run_command(const std::string& command, const nlohmann::json& scenario,
                      const Options& opt = {});

/// Reads the scenario file (exit 2 on unreadable or malformed JSON) and runs.
RunResult run_file(const std::string& command, const std::string& path, const Options& opt = {});

/// Runs every *.json scenario under `path` (a directory or a single file)
/// and compares each outcome with its `expect` block.
RunResult run_regress(const std::string& path, const Options& opt = {});

/// Scenario directory bundled with the build.
std::string bundled_scenario_dir();

/// Full command-line entry point.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fluxkit::cli
