#pragma once

#include <iosfwd>

namespace dofb::cli {

enum ExitCode : int {
  kOk = 0,
  kAcceptanceFailure = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kMismatch = 4,
  kDecodeFailure = 5,
};

/// Entry point of the dofb tool. Exactly one JSON document goes to `out`;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dofb::cli
