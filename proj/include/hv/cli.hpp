#pragma once

#include <string>
#include <vector>

namespace hv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitError = 3;

struct CommandResult {
    int exit_code = kExitOk;
    std::string out; // one JSON report, newline-terminated (empty on usage errors)
    std::string err; // usage text or error message
};

/// Runs one subcommand. `args` excludes the program name, e.g.
/// {"verify-lie", "--p", "1,2", "--window", "2"}.
CommandResult run_command(const std::vector<std::string>& args);

/// Usage text listing the subcommands and flags.
std::string usage();

} // namespace hv::cli
