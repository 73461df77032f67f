#ifndef RIF_CLI_HPP
#define RIF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rif {

// Exit codes. Answered queries exit 0 even when the answer is negative
// (invalid pair, no countermodel, unknown provability).
inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;  // paper-suite found a regression
inline constexpr int kExitUsage = 2;         // bad flags or arguments
inline constexpr int kExitIo = 3;            // unreadable or malformed file
inline constexpr int kExitSyntax = 4;        // formula/pair/valuation input error
inline constexpr int kExitInvalidFrame = 5;  // frame fails validation

// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rif

#endif  // RIF_CLI_HPP
