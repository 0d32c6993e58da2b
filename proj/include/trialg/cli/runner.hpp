#pragma once

#include <string>

#include "trialg/cli/config.hpp"

namespace trialg {

struct RunResult {
  json report;
  /// 0 when no task failed or errored, 1 otherwise.
  int exit_code;
};

/// Runs every task in order; a task that throws is recorded with status
/// "error" and the run continues. Throws ConfigError before any task runs.
RunResult run(const RunConfig& config);

/// Canonical text form of a report: sorted keys, two-space indent, trailing newline.
std::string render_report(const json& report);

}  // namespace trialg
