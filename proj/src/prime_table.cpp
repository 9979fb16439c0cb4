#include "twinsieve/prime_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace twinsieve {

namespace {

u64 isqrt_u64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

PrimeTable::PrimeTable(u64 limit, PrimeTableOptions opt) {
  if (limit < 3) throw std::domain_error("PrimeTable: limit must be >= 3");
  if (limit > opt.max_limit)
    throw resource_error("PrimeTable: limit " + std::to_string(limit) +
                         " exceeds the configured budget " + std::to_string(opt.max_limit));
  limit_ = limit;
  spf_limit_ = std::min(opt.spf_limit, limit);
  if (spf_limit_ < 3) spf_limit_ = 3;
  if (spf_limit_ > (u64(1) << 31))
    throw resource_error("PrimeTable: spf_limit too large for the dense factor table");

  // --- odd primality bitmap, 3..limit ---------------------------------
  const u64 nbits = (limit_ - 1) / 2;  // odd numbers 3, 5, ..., <= limit
  const u64 nwords = (nbits + 63) / 64;
  bits_.assign(nwords, ~u64(0));
  // mask out bits past nbits in the last word
  if (nbits % 64 != 0) bits_.back() &= (~u64(0)) >> (64 - nbits % 64);

  // Sieving primes are the odd primes <= sqrt(limit); find them with a
  // plain pass over the prefix of the same bitmap.
  const u64 root = isqrt_u64(limit_);
  std::vector<u64> sieving;
  for (u64 p = 3; p <= root; p += 2) {
    if (!odd_bit(p)) continue;
    sieving.push_back(p);
    for (u64 m = p * p; m <= root; m += 2 * p) {
      const u64 i = (m - 3) / 2;
      bits_[i >> 6] &= ~(u64(1) << (i & 63));
    }
  }

  // Segmented marking over the rest of the bitmap (cache-sized chunks of
  // bit indices; bit i represents the odd number 2i+3).
  const u64 seg_bits = u64(1) << 18;
  const u64 first = root >= 3 ? (root - 3) / 2 + 1 : 0;
  for (u64 lo = first; lo < nbits; lo += seg_bits) {
    const u64 hi = std::min(lo + seg_bits, nbits);  // exclusive
    const u64 lo_val = 2 * lo + 3;
    const u64 hi_val = 2 * (hi - 1) + 3;
    for (u64 p : sieving) {
      if (p * p > hi_val) break;
      // first odd multiple of p that is >= max(p*p, lo_val)
      u64 m = std::max(p * p, ((lo_val + p - 1) / p) * p);
      if (m % 2 == 0) m += p;
      for (; m <= hi_val; m += 2 * p) {
        const u64 i = (m - 3) / 2;
        bits_[i >> 6] &= ~(u64(1) << (i & 63));
      }
    }
  }

  cum_.assign(nwords + 1, 0);
  for (u64 w = 0; w < nwords; ++w) cum_[w + 1] = cum_[w] + std::popcount(bits_[w]);

  // --- dense smallest-prime-factor table, 0..spf_limit ----------------
  spf_.assign(spf_limit_ + 1, 0);
  for (u64 i = 2; i <= spf_limit_; ++i) {
    if (spf_[i] != 0) continue;
    for (u64 m = i; m <= spf_limit_; m += i)
      if (spf_[m] == 0) spf_[m] = static_cast<u32>(i);
  }

  for (u64 n = 3; n <= spf_limit_; n += 2)
    if (spf_[n] == n) odd_primes_.push_back(n);
}

bool PrimeTable::is_prime(u64 n) const {
  if (n > limit_)
    throw resource_error("PrimeTable::is_prime: " + std::to_string(n) + " exceeds table limit " +
                         std::to_string(limit_));
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  return odd_bit(n);
}

u64 PrimeTable::spf(u64 n) const {
  if (n < 2) throw std::domain_error("PrimeTable::spf: argument must be >= 2");
  if (n > spf_limit_)
    throw resource_error("PrimeTable::spf: " + std::to_string(n) + " exceeds factor table limit " +
                         std::to_string(spf_limit_));
  return spf_[n];
}

u64 PrimeTable::pi(u64 x) const {
  if (x > limit_)
    throw resource_error("PrimeTable::pi: " + std::to_string(x) + " exceeds table limit " +
                         std::to_string(limit_));
  if (x < 2) return 0;
  if (x < 3) return 1;
  // count odd primes 3..x, plus one for the prime 2
  const u64 i = (x - (x % 2 == 0 ? 1 : 0) - 3) / 2;  // bit of the largest odd <= x
  const u64 w = i >> 6;
  const u64 mask = (i & 63) == 63 ? ~u64(0) : ((u64(1) << ((i & 63) + 1)) - 1);
  return 1 + cum_[w] + std::popcount(bits_[w] & mask);
}

u64 PrimeTable::odd_prime(u64 i) const {
  if (i >= odd_primes_.size())
    throw resource_error("PrimeTable::odd_prime: index " + std::to_string(i) +
                         " is past the enumerated odd primes (factor table limit " +
                         std::to_string(spf_limit_) + ")");
  return odd_primes_[i];
}

u64 PrimeTable::prime_index(u64 i) const { return (odd_prime(i) - 3) / 2; }

}  // namespace twinsieve
