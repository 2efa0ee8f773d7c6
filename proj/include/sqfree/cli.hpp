#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqfree::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Entry point behind the `sqfree` executable; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqfree::cli
