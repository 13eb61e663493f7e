#pragma once

#include <string>
#include <vector>

namespace qss::cli {

// Entry point behind the qss binary.  Exit codes: 0 success (key released
// or command completed), 1 usage/configuration error, 2 session aborted by
// the verification verdict, 3 verification table mismatch.
int dispatch(int argc, char** argv);

// Convenience overload for tests; args excludes the program name.
int dispatch(const std::vector<std::string>& args);

}  // namespace qss::cli
