#ifndef NESTO_CLI_HPP
#define NESTO_CLI_HPP

#include <iostream>

namespace nesto {

/// Runs one CLI invocation. Returns the process exit code: 0 on success,
/// 1 on domain errors, 2 on malformed input.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out);

}  // namespace nesto

#endif
