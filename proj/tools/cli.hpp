#pragma once

#include <ostream>

namespace simpair::cli {

/// Process exit codes. These are the tool's only machine-readable contract.
enum ExitCode : int {
  kHolds = 0,
  kDoesNotHold = 1,
  kInputError = 2,
  kDisagreement = 3,
  kCapExceeded = 4,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simpair::cli
