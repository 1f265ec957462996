#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synlab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line. Human-readable output goes to `out`, diagnostics
/// to `err`; the canonical JSON report goes to the --out path when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace synlab
