#pragma once

#include <iosfwd>

namespace expwell::cli {

/// Entry point of the `expwell` tool. Returns the process exit code:
/// 0 success, 1 computation failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace expwell::cli
