#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace areagrowth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

/// Runs one invocation (arguments exclude the program name). Data goes to `out`
/// unless --output names a file; diagnostics and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace areagrowth::cli
