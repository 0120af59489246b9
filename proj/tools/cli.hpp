#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace he3oam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
/// Closed forms and oracle disagree somewhere on the requested grid.
inline constexpr int kExitDisagreement = 3;

/// Runs one subcommand. args excludes the program name. Normal output goes
/// to out (or the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace he3oam::cli
