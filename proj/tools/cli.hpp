#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frustra::cli {

enum Exit : int { Ok = 0, MathFailed = 1, Usage = 2, ResourceLimit = 3 };

// Parses argv (argv[0] is the program name) and runs one subcommand. Reports go
// to out (or the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frustra::cli
