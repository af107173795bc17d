#ifndef CAUSALCOH_CLI_HPP
#define CAUSALCOH_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace causalcoh::cli {

inline constexpr const char* kSchema = "causalcoh.report/1";

enum ExitCode : int { ok = 0, audit_failure = 1, usage_error = 2 };

/// Runs one subcommand (args excludes the program name) and writes the
/// report to `out`. Subcommands: derham, calabi, verify, hook, killing.
/// Failures of any kind still produce a JSON object with an "error" key.
int run(const std::vector<std::string>& args, std::ostream& out);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace causalcoh::cli

#endif  // CAUSALCOH_CLI_HPP
