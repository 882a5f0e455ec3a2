#ifndef CCT_CLI_HPP
#define CCT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cct {

/// Runs the full command-line interface on the given argument list (without
/// the program name) and returns the process exit code:
///   0 condition holds / object found
///   1 condition refuted / nothing found
///   2 input error (bad flags, files, schema, preconditions)
///   3 degenerate input
///   4 internal invariant violation
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cct

#endif  // CCT_CLI_HPP
