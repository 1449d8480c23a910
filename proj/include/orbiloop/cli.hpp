#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbiloop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not cohomologous, does not split, axiom failure
inline constexpr int kExitInputError = 2;

// Runs one subcommand (group, h2, cohomologous, twist, tqft, verdict); args
// excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbiloop::cli
