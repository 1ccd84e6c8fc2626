#ifndef BANDHARVEST_CLI_HPP
#define BANDHARVEST_CLI_HPP

#include <ostream>

// Command-line front end.  run_cli is the whole program minus the
// process boundary so tests can drive it in memory.

namespace bandharvest::cli {

/// Exit status: 0 success, 2 usage error, 3 computation failure.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace bandharvest::cli

#endif
