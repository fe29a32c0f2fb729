#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rsshape/coloring.hpp"
#include "rsshape/tableau.hpp"

namespace rsshape::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rows separated by '/', entries by commas: "1,3,7/2,4/5/6". A JSON object
/// with a "rows" field is accepted too.
Tableau parse_tableau(std::string_view text);

/// Same row syntax with color indices, or coloring JSON.
Coloring parse_coloring(std::string_view text);

/// "1,3,7/2,4/5/6"
std::string compact(const Tableau& t);

}  // namespace rsshape::cli
