#pragma once

#include "twinsieve/common.hpp"

namespace twinsieve {

// Largest bound (exclusive) for which the fixed Miller-Rabin base set used
// here is known to be a deterministic primality test.
u128 primality_certainty_bound();

// Deterministic Miller-Rabin.  The u128 overload refuses inputs at or above
// primality_certainty_bound() rather than degrade to a probable-prime test.
bool is_prime_det(u64 n);
bool is_prime_det(u128 n);

}  // namespace twinsieve
