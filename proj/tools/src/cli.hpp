#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odcode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace odcode::cli
