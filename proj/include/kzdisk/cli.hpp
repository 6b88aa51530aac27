#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kzdisk {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

/// Runs the command line `kzdisk <args...>` (program name excluded) and
/// returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kzdisk
