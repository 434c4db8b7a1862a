// cli.hpp -- command-line front end, separated from main() for testing
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mealy {

/// Parses and dispatches one command (args exclude the program name).
/// Exit status: 0 success / property holds; 1 property fails or a search
/// returns none; 2 usage or parse error. All reports are deterministic.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mealy
