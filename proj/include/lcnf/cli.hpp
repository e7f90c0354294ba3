#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcnf::cli {

inline constexpr int exit_ok = 0;
/// A checked property does not hold (check-linear, check-lk, minimize input SAT).
inline constexpr int exit_property_failed = 1;
/// Bad arguments, unreadable or malformed input, exceeded limits.
inline constexpr int exit_error = 2;
inline constexpr int exit_sat = 10;
inline constexpr int exit_unsat = 20;

/// Runs one command line (without the program name). Output files named on
/// the command line are written directly; everything else goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lcnf::cli
