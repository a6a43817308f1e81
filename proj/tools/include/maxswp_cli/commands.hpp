#ifndef MAXSWP_CLI_COMMANDS_HPP
#define MAXSWP_CLI_COMMANDS_HPP

#include <iosfwd>

namespace maxswp::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,      ///< bad command line
    kBadInput = 2,   ///< unreadable or malformed input, invalid partition, wrong graph class
    kTooLarge = 3,   ///< instance beyond the exact solver's size limit
};

/// Runs the maxswp command line with the given argument vector, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace maxswp::cli

#endif  // MAXSWP_CLI_COMMANDS_HPP
