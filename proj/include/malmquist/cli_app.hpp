#pragma once

#include <string>
#include <vector>

namespace malmquist {

/// Full command-line front end (interpolate / bounds / oracle / sweep /
/// bernstein / verify). Returns the process exit code: 0 success, 1 numeric
/// failure, 2 malformed input.
int run_cli(const std::vector<std::string>& args);

}  // namespace malmquist
