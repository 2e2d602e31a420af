#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace vrsp::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int negative = 1;
inline constexpr int input_error = 2;

/// Runs the command line (args[0] is the program name). Never throws.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace vrsp::cli
