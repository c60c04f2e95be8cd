#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mono::cli {

/// Parses and runs one toolkit command. Returns the process exit code:
/// 0 = holds, 1 = refuted, 2 = inconclusive, 64 = usage or input error.
/// Reports go to `out` (JSON when --json is set), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mono::cli
