#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modrep {

inline constexpr int kExitPass = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name). Subcommands: table,
/// clifford, verify, verify-section2, emit-tables.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modrep
