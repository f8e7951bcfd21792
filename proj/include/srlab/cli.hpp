#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srlab {

// Runs `srlab <args...>` (args excludes the program name); returns the exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace srlab
