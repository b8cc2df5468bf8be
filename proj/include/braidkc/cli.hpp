#pragma once

namespace braidkc {

// Exit codes, also documented in the README.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // unknown flag / bad invocation
inline constexpr int kExitFile = 3;    // missing or unreadable file
inline constexpr int kExitConfig = 4;  // config validation failure
inline constexpr int kExitData = 5;    // runtime/data error

// Dispatches a subcommand among {gen, relations, reduce, compress,
// estimate, sweep, fit, analyze, theory}. Errors go to stderr as one JSON
// line {"error": ..., "code": ...}.
int run_command(int argc, const char* const* argv);

}  // namespace braidkc
