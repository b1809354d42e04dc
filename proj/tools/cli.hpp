#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scatfact::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kCheckFailed = 2,  // computation fine, a checked claim did not hold
  kUsage = 64,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scatfact::cli
