// Command-line driver. Exit codes: 0 verified/found/certified,
// 1 inconclusive at the given bounds, 2 invalid input, 3 internal
// inconsistency (routes disagree or a witness fails its re-check).

#ifndef SKEWLAB_CLI_HPP
#define SKEWLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace skewlab {

enum ExitCode : int { kExitOk = 0, kExitInconclusive = 1, kExitInvalid = 2, kExitInconsistent = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewlab

#endif  // SKEWLAB_CLI_HPP
