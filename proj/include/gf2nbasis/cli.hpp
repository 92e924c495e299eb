#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gf2nbasis::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kGoldenMismatch = 3,
};

/// Runs one command line (program name excluded). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gf2nbasis::cli
