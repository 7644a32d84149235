#ifndef MINRANK_TOOLS_CLI_HPP
#define MINRANK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace minrank::cli {

/// Process exit codes.
enum ExitStatus : int {
    kSuccess = 0,
    kCheckFailed = 1,  // a diff mismatch, a failed witness, a fixture gap
    kUsageError = 2,   // bad arguments, unreadable or malformed input
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit status. All output goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minrank::cli

#endif  // MINRANK_TOOLS_CLI_HPP
