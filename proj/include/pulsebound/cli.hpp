#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pulsebound::cli {

inline constexpr const char* kVersion = "pulsebound 1.0.0";

/// Runs one subcommand. `args` excludes the program name.
/// Returns 0 on success, 1 on a failed precondition or failed check, 2 on
/// a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pulsebound::cli
