#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperbetti::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_data = 2;

/// Entry point behind the `hyperbetti` executable. `args` excludes the
/// program name. Machine output goes to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hyperbetti::cli
