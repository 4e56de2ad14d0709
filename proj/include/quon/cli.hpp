#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quon::cli {

// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

/// Runs the quon command line (args excludes the program name). All regular
/// output goes to out, diagnostics and warnings to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quon::cli
