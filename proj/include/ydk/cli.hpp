#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ydk::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitMismatch = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a file of line-delimited JSON requests, one result object per line.
int run_batch(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace ydk::cli
