#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radial::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one radial-explorer invocation. `args` excludes the program name.
/// Output files go where --output says, otherwise to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radial::cli
