#pragma once

#include "cycsig/circsig.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cycsig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitContradiction = 3;

/// Runs one command line (args excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct OracleCheckResult {
    std::int64_t entries = 0;
    std::int64_t mismatches = 0;
};

/// Compares every matrix entry against a double-precision evaluation of
/// sin(pi a b / N) / sin(pi b / N).
OracleCheckResult oracle_check(const Modulus& mod);

} // namespace cycsig::cli
