#pragma once

#include <span>
#include <vector>

#include "twinsieve/common.hpp"

namespace twinsieve {

struct PrimeTableOptions {
  // Dense smallest-prime-factor table cap (4 bytes per integer).
  u64 spf_limit = u64(1) << 22;
  // Primality-bitmap budget; the default covers (2*5000 + 5)^2.
  u64 max_limit = u64(1) << 27;
};

// Sieve-backed prime table: an odd-number primality bitmap up to `limit`
// (built with a segmented Eratosthenes pass), a dense smallest-prime-factor
// table up to `spf_limit`, per-block popcounts for O(1) prime counting, and
// the ordered odd primes p_0 = 3, p_1 = 5, p_2 = 7, ...
//
// Queries past the covered ranges throw resource_error rather than giving a
// wrong answer; construction past max_limit is refused the same way.
class PrimeTable {
 public:
  explicit PrimeTable(u64 limit, PrimeTableOptions opt = {});

  u64 limit() const { return limit_; }
  u64 spf_limit() const { return spf_limit_; }

  bool is_prime(u64 n) const;  // any n <= limit()
  u64 spf(u64 n) const;        // smallest prime factor, 2 <= n <= spf_limit()
  u64 pi(u64 x) const;         // number of primes <= x, x <= limit()

  // Odd primes in order: odd_prime(0) = 3, odd_prime(1) = 5, ...
  // Covers every odd prime <= spf_limit().
  u64 odd_prime(u64 i) const;
  u64 odd_prime_count() const { return odd_primes_.size(); }
  std::span<const u64> odd_primes() const { return odd_primes_; }

  // Index of the i-th odd prime in the 2k+3 numbering: q_i = (p_i - 3) / 2.
  u64 prime_index(u64 i) const;

 private:
  u64 limit_ = 0;
  u64 spf_limit_ = 0;
  std::vector<u64> bits_;        // bit i set <=> 2i+3 is prime
  std::vector<u64> cum_;         // cum_[w] = set bits in words [0, w)
  std::vector<u32> spf_;         // spf_[n] for n <= spf_limit
  std::vector<u64> odd_primes_;

  bool odd_bit(u64 n) const { // n odd, 3 <= n <= limit
    const u64 i = (n - 3) / 2;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }
};

}  // namespace twinsieve
