#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsphere::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;
inline constexpr int kExitIo = 74;

/// Runs one command line. `args` excludes the program name. Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses an angle: a decimal number, or a rational multiple of pi written
/// as "pi", "pi/6", "3pi/4", "3*pi/4" or "-pi/2".
double parse_angle(const std::string& text);

}  // namespace qsphere::cli
