#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degenlab {

// Exit codes of the command-line tool.
inline constexpr int kExitYes = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNo = 2;
inline constexpr int kExitGate = 3;

inline constexpr const char* kToolVersion = "degenlab 1.0.0";

// Runs one command; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degenlab
