#pragma once

// Command-line surface: gen, eval, sparsify, solve, trial, params.
//
// Exit status: 0 success, 1 validation or I/O error, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace lcsparse {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcsparse
