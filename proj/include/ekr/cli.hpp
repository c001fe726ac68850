#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ekr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;      // usage, domain, parse, budget and io errors
inline constexpr int kExitViolation = 2;  // a bound or a verification failed

/// Runs the command line `args` (without the program name). Errors are
/// reported on `err` with a prefix naming their kind.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ekr::cli
