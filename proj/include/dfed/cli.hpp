#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dfed {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,          // success, feasible, kernelized
    kExitFailure = 1,     // runtime error or verification discrepancy
    kExitUsage = 2,
    kExitGuard = 3,       // an oracle refused because of its size guard
    kExitNo = 10,         // decided no / infeasible
};

inline constexpr int kReportSchemaVersion = 1;

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dfed
