#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lvf {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitError = 2;

/// Runs the command-line driver on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lvf
