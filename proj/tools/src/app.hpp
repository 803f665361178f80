#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qaran::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kDomainError = 2, kWarnings = 3 };

inline constexpr const char* kConfigEnvVar = "QARAN_CONFIG";

/// Full command-line entry point; argv[0] is the program name.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaran::cli
