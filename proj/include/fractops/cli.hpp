#pragma once

#include <ostream>

namespace fractops {

/// Runs the command line. Exit codes: 0 success, 1 usage, 2 numerical or
/// validation failure, 3 I/O.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fractops
