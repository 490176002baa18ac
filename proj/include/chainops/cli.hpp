#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainops::cli {

/// Command-line entry point, also used in-process by the tests. args is the
/// argument list without the program name. Exit codes: 0 all requested
/// properties hold, 1 a checked property fails, 2 usage or input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace chainops::cli
