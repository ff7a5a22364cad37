#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiercomb {

// Exit codes of the command-line surface.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;  // a verify run reported fail
inline constexpr int exit_bad_input = 2;      // piped object failed to parse/validate
inline constexpr int exit_usage = 3;          // flag errors

// Runs one CLI invocation. `args` excludes the program name. Streams stand
// in for stdin/stdout/stderr so the surface is testable in-process.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace tiercomb
