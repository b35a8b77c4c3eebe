#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace confequiv::cli {

/// Exit codes: 0 success, 1 a negative mathematical verdict (mismatch,
/// infeasible, invalid claim, failed check), 2 bad input or usage.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name. The JSON report
/// goes to `out`; usage text, errors and timing go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confequiv::cli
