#pragma once

#include <ostream>

namespace sspsat {

inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;

/// Entry point of the `sspsat` tool: solve, gen-ph, verify and oracle.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sspsat
