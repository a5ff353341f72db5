#pragma once

#include <string>
#include <vector>

namespace axial {

/// Entry point shared by the binary and the tests; returns the process exit
/// code. Exit codes: 0 success, 1 verification found violations, 2 bad
/// flags, 3 inadmissible eta, 4 unloadable algebra file.
int run_cli(const std::vector<std::string>& args);

}  // namespace axial
