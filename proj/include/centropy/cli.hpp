#pragma once

// Command-line front end. Exit codes: 0 success, 1 internal failure,
// 2 input validation, 3 I/O, 4 domain precondition.

#include <iosfwd>
#include <string>
#include <vector>

namespace centropy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitDomain = 4;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace centropy::cli
