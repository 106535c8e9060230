#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wbcast {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitImpossibleBranch = 3;
inline constexpr int kExitInvariantViolation = 4;

// Entry point of the `wbcast` tool. `args` excludes the program name. The
// report goes to --out when given, otherwise to `out`; diagnostics go to
// `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wbcast
