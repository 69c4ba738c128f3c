// Command-line front end. Kept in the library so tests can drive it without
// spawning a process.
#ifndef BLBETTI_CLI_HPP_
#define BLBETTI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace blbetti::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kApplicability = 3,
  kMismatch = 4,
};

// args[0] is the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blbetti::cli

#endif  // BLBETTI_CLI_HPP_
