#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmg::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kInputError = 1, kNotA2Bmg = 2 };

/// Runs the tool. `args` excludes the program name; `-` as a path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bmg::cli
