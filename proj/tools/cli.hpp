#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsun::cli {

/// Exit codes: 0 success / family free, 1 sunflower witness found, 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitWitness = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line (args excludes the program name). Machine-readable
/// JSON goes to `out`, commentary to `err`; `in` backs the "-" input path.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace qsun::cli
