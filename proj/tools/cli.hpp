#ifndef SQPOW_TOOLS_CLI_HPP
#define SQPOW_TOOLS_CLI_HPP

#include <ostream>

namespace sqpow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. Text goes to `out`, diagnostics to `err`; JSON goes
/// to the --json path ("-" sends it to `out` in place of the text report).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sqpow::cli

#endif  // SQPOW_TOOLS_CLI_HPP
