#pragma once

#include <iosfwd>

namespace twinsieve::cli {

// Full command-line front end, parameterized over the output streams so the
// test suite can drive it in-process.  Returns the process exit code:
// 0 success, 1 verification failure, 2 usage error, 3 resource refusal.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twinsieve::cli
