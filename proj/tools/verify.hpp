#pragma once

#include <iosfwd>
#include <string>

#include "twinsieve/common.hpp"

namespace twinsieve::cli {

struct VerifyOptions {
  // Caps the j sweeps; each check also respects its own fixed upper bound
  // (e.g. the partial-psi grid never goes past j = 100 regardless).
  u64 max_j = 100;
  std::string suite = "all";  // all | counts | crt | series | wheel
};

// Runs the invariant suites and writes one JSON summary object to `out`:
// per-suite assertion counts, every named check with pass/fail, and the
// first failing detail.  Returns 0 when every assertion passed, 1 otherwise.
int run_verify(const VerifyOptions& opt, std::ostream& out);

}  // namespace twinsieve::cli
