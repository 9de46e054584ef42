#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reorderkit::cli {

/// Exit codes: 0 success, 1 negative domain result, 2 malformed input.
enum ExitCode : int { kOk = 0, kNegative = 1, kBadInput = 2 };

/// Runs one command line (without the program name) against the given streams.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace reorderkit::cli
