#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fjb::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kInvalidParameters = 2,
  kDivergent = 3,
};

/// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& suite_names();

/// Runs one property suite ("all" runs every suite). Prints one PASS/FAIL line per
/// property and a summary; returns kOk iff everything passed.
int run_checks(const std::string& suite, std::uint64_t seed, std::ostream& out);

}  // namespace fjb::cli
