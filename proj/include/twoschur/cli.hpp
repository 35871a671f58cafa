#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoschur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the command-line tool; args excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default worker count: SCHUR_JOBS when set to a positive integer, else 1.
unsigned default_jobs();

}  // namespace twoschur::cli
