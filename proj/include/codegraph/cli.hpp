#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace codegraph::cli {

// Exit codes: 0 success, 2 parse failure, 3 degenerate input code,
// 4 parameter violation, 5 oracle/enumeration cap exceeded.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 2;
inline constexpr int exit_degenerate = 3;
inline constexpr int exit_params = 4;
inline constexpr int exit_cap = 5;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codegraph::cli
