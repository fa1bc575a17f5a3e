#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relbell {

/**
 * Parses and dispatches one command-line invocation. args excludes the
 * program name. Returns the process exit status: 0 on success, 2 for invalid
 * input, 3 for a numerical failure (residual or deviation above tolerance,
 * non-converged optimization under --strict). All numeric output is printed
 * with 17 significant digits.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace relbell
