#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 success,
/// 1 adjudication mismatch (verify only), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptsym::cli
