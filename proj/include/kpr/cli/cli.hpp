#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpr::cli {

enum ExitCode : int { kAffirmative = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

/// Runs one command line (args[0] is the program name). Human-readable
/// text, or a JSON report with --json, goes to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace kpr::cli
