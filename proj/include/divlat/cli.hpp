#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "divlat/lattice.hpp"

namespace divlat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotClosed = 2;

/// Integers separated by whitespace and/or commas. Throws ParseError.
std::vector<Integer> parse_integers(const std::string& text);

/// Runs the command line `args` (without the program name). `in` backs the
/// "-" (stdin) input form.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace divlat::cli
