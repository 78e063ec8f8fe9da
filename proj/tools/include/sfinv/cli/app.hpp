#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfinv::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_soundness = 2 };

/// Parses and executes one command line. Unknown verdicts still exit 0.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfinv::cli
