#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardy/config.hpp"
#include "hardy/noor.hpp"
#include "hardy/report.hpp"

namespace hardy {

enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitValidation = 2, kExitNumerical = 3 };

struct ExperimentResult {
  SweepReport report;
  /// Empty when every numerical-quality check passed.
  std::vector<std::string> quality_failures;
};

/// Validates the config, runs the experiment, fills report metadata.
/// Throws ValidationError for config problems.
ExperimentResult run_experiment(const RunConfig& cfg);

/// Runs, writes the report(s) and returns the process exit code. Errors and
/// quality failures go to `log`; progress too unless quiet.
int run(const RunConfig& cfg, std::ostream& log, bool quiet = false);

/// Target tokens: one, 1-z, z^m, h_k, h_k-h_l, complement (needs K).
NamedVector parse_target(const std::string& token, std::size_t degree, std::size_t complement_k = 0);

}  // namespace hardy
