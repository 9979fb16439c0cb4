#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twinsieve {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Thrown when a computation would exceed a configured memory or enumeration
// budget.  Kept distinct from std::domain_error so callers (and the CLI) can
// tell "bad argument" from "too big to compute with the current limits".
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Overflow-checked 64-bit arithmetic; throws std::overflow_error.
u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);

std::string to_string(u128 v);
std::string to_string(i128 v);

// Floor division (round toward -inf), denominator must be positive.
constexpr i128 floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

}  // namespace twinsieve
