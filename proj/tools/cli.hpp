#pragma once

#include <iosfwd>

namespace qseries::cli {

/// Exit codes: 0 success, 1 usage or math-domain error, 2 convergence failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
