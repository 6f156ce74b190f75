#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace todakdv::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace todakdv::cli
