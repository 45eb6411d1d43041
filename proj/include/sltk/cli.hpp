#pragma once

#include <iosfwd>

namespace sltk::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // verify suite reported a failure
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Runs one subcommand; JSON goes to `out`, diagnostics to `err`.
int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sltk::cli
