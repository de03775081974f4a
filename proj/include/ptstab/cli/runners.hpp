#pragma once

#include <string>
#include <vector>

#include "ptstab/cli/config.hpp"
#include "ptstab/cli/output.hpp"

namespace ptstab::cli {

struct RunResult {
    Table table;
    /// Failed rows, or threshold residuals above tolerance (exit code 3).
    bool numerical_failure = false;
    std::vector<std::string> diagnostics;
};

/// Columns: value, re1..re4, im1..im4, classification, multiple, failed.
RunResult run_eigensweep(const RunConfig& cfg);

/// Columns: <axis1>, <axis2>, <critical>, branch, stable_side, empty, failed.
RunResult run_boundary(const RunConfig& cfg);

/// Columns: name, value, oracle, residual, tolerance, ok.
RunResult run_thresholds(const RunConfig& cfg);

RunResult run(const RunConfig& cfg);

enum ExitCode { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3 };

/// Full pipeline used by the executable: parse argv, resolve, run, emit.
int main_entry(int argc, char** argv);

}  // namespace ptstab::cli
