#ifndef ORTHOIEQ_TOOLS_CLI_HPP
#define ORTHOIEQ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace orthoieq::cli {

enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 2,
    kNumericError = 3,
    kVerificationFailure = 4,
};

/// Runs one command line (without the program name). Records go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthoieq::cli

#endif  // ORTHOIEQ_TOOLS_CLI_HPP
