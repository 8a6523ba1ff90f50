// cli.hpp -- the pseudoprim command line

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pseudoprim::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

/// Runs one invocation; `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pseudoprim::cli
