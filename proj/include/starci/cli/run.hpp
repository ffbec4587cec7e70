#ifndef STARCI_CLI_RUN_HPP
#define STARCI_CLI_RUN_HPP

#include <ostream>
#include <string>
#include <vector>

namespace starci::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one command. args excludes the program name. The JSON report goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starci::cli

#endif  // STARCI_CLI_RUN_HPP
