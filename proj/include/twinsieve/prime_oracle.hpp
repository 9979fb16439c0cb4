#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twinsieve/index_core.hpp"
#include "twinsieve/prime_table.hpp"

namespace twinsieve {

// Brute-force ground truth for the interval counts: everything in this
// header is computed by direct primality scans over [0, k_max], never by
// the closed-form or sieve-identity paths it is used to check.

using IndexPair = std::pair<u64, u64>;

struct PiCounts {
  u64 pi_sq;      // primes <= (2j+5)^2
  u64 pi_prime;   // odd primes p with 5 <= p <= (2j+5)^2, i.e. pi_sq - 2
  u64 pi_dprime;  // odd primes <= 2j+5 (3 included), i.e. pi(2j+5) - 1
};

// Full decomposition of [0, k_max]: the indices with value not divisible
// by 3 (a_set), the composite ones among those (b_set), the consecutive
// pairs (3n+1, 3n+2) inside a_set (gamma), and gamma split by how many of
// the two values are prime (both / none / exactly one).
struct ClassifiedInterval {
  u64 j = 0;
  CountingInterval interval{};
  std::vector<u64> a_set;
  std::vector<u64> b_set;
  std::vector<IndexPair> gamma;
  std::vector<IndexPair> pi_pairs;   // both prime: the twin pairs
  std::vector<IndexPair> psi_pairs;  // both composite
  std::vector<IndexPair> xi_pairs;   // mixed
};

// Cardinalities only; same scan without materializing the sets.
struct IntervalCounts {
  u64 a = 0, b = 0, gamma = 0, pi = 0, psi = 0, xi = 0;
};

// Counts restricted to divisibility by the first n odd primes after 3.
struct RestrictedCounts {
  u64 b_n = 0;    // members of a_set whose value is a proper multiple of some p_1..p_n
  u64 psi_n = 0;  // gamma pairs with both values such proper multiples
};

PiCounts pi_counts(const PrimeTable& table, u64 j);
ClassifiedInterval classify_interval(const PrimeTable& table, u64 j);
IntervalCounts interval_counts(const PrimeTable& table, u64 j);
RestrictedCounts oracle_restricted(const PrimeTable& table, u64 j, u64 n_primes);

// Smallest odd y >= 1 with y = 0 mod p_k for k in k1, y = -2 mod p_k for
// k in k2, and y = 2 mod 3 — found by a plain linear scan over candidate
// multiples (no modular inverses), or nullopt if none exists <= scan_limit.
// Index sets must be non-empty, disjoint, and must not contain 0.
std::optional<u64> oracle_y0(const PrimeTable& table, std::span<const u64> k1,
                             std::span<const u64> k2, u64 scan_limit);

}  // namespace twinsieve
