#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hankel::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name. Writes a single JSON
/// document (or a table with --pretty) to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hankel::cli
