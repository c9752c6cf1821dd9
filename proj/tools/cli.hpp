#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genform::cli {

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_identity_failure = 1;
inline constexpr int exit_usage = 2;

// Runs `genform <args...>` (args excludes the program name). Results go to `out`,
// diagnostics to `err` as "line:col: code: message".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genform::cli
