#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperchar::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kBadArgs = 2;
inline constexpr int kInapplicableRoute = 3;
inline constexpr int kIoError = 4;

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperchar::cli
