#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stunted::cli {

// Dispatches one subcommand. Exit codes: 0 all verdicts pass, 1 verdict
// failure, 2 usage or parameter error, 3 internal assertion failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stunted::cli
