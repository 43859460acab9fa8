#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mushy::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,  ///< validation failure, subcritical data, failed self-check
    kUsageError = 2,
};

/// Shortest decimal that round-trips to `value` (at most 17 significant digits).
std::string format_number(double value);

/// Entry point behind the `mushy` executable. `args` excludes the program
/// name. CSV and reports go to `out` unless --output is given; diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mushy::cli
