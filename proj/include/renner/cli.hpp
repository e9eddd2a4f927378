#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace renner {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // verify found an oracle/proof mismatch
inline constexpr int kExitUsage = 2;     // bad command line or desk bound exceeded

/// Runs one command line; args excludes the program name.  Regular output
/// goes to out (or to the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace renner
