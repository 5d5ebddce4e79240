#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blochgeom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `blochgeom` executable. `args` excludes argv[0].
/// Returns 0 on success, 1 when a checked property fails, 2 on usage or
/// I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blochgeom
