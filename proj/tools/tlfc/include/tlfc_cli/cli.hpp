#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tlfc::cli {

/// Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.
enum ExitCode : int { Ok = 0, DomainError = 1, UsageError = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlfc::cli
