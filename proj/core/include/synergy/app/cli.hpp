#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synergy::app {

/// Exit codes: 0 success, 1 invalid input or domain error, 2 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

/// Runs the `synergy` command line. `args` excludes the program name.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace synergy::app
