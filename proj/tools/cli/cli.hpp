#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gromon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;

/// Runs one command. args excludes the program name. Reports go to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gromon::cli
