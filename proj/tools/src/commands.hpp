#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace qaran::cli {

/// Non-fatal condition reported next to a successful run.
struct Warning {
  std::string code;
  std::string message;
};

/// One JSON object per line for stderr.
std::string warning_json(const Warning& w);

struct RunOptions {
  std::string command;
  std::optional<std::string> paper_table;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct RunResult {
  Report report;
  std::vector<Warning> warnings;
};

const std::vector<std::string>& command_names();
/// Reference tables available through --paper-table, with their owning command.
const std::vector<std::pair<std::string, std::string>>& paper_table_names();

/// Dispatches one subcommand. Throws ConfigError for bad combinations of
/// options and DomainError for model-domain failures.
RunResult run_command(const RunConfig& config, const RunOptions& options);

// Printed-precision helpers, exposed for tests.
std::string group_thousands(const std::string& digits);
std::string abbreviate(double value, int significant = 3);
std::string si_format(double value, const std::string& unit, int significant = 3);

}  // namespace qaran::cli
