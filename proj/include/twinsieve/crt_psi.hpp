#pragma once

#include <vector>

#include "twinsieve/prime_table.hpp"

namespace twinsieve {

// A set of odd-prime indices {k : k >= 1}, i.e. primes from p_1 = 5 up,
// sorted and duplicate-free, with the (squarefree) product of its primes.
// Index 0 (the prime 3) is rejected: the mod-3 congruence is carried
// separately by the solver.
class PrimeIndexSet {
 public:
  PrimeIndexSet(std::vector<u64> indices, const PrimeTable& table);

  const std::vector<u64>& indices() const { return indices_; }
  const std::vector<u64>& primes() const { return primes_; }
  u128 product() const { return product_; }
  u64 size() const { return indices_.size(); }

 private:
  std::vector<u64> indices_;
  std::vector<u64> primes_;
  u128 product_ = 1;
};

// Whether the first candidate pair of the solution family had to be skipped
// because one of its two members is prime.
enum class CrtCase { FirstPairExcluded, AllSolutions };

struct CrtSolution {
  u128 p1 = 1, p2 = 1;  // products over k1 and k2
  u128 y0 = 0;          // smallest odd solution of the simultaneous congruences
  u128 modulus = 0;     // 6 * p1 * p2
  CrtCase case_tag = CrtCase::AllSolutions;
  u128 x0 = 0;          // first index whose pair (x0, x0+1) has both values composite
};

// Solves y = 1 (mod 2), y = 2 (mod 3), y = 0 (mod p_k | k in k1),
// y = -2 (mod p_k | k in k2) for the smallest y0 in [1, modulus), then
// derives x0 = (y0-3)/2, advanced one period when y0 or y0+2 is prime.
CrtSolution solve_y0(const PrimeTable& table, const PrimeIndexSet& k1, const PrimeIndexSet& k2);

// The solution of the swapped system, via modulus - y0 - 2 (no re-solve).
u128 mirror_y0(const CrtSolution& s);

// How many indices x = x0 (mod 3*p1*p2) fall inside [0, k_max(j)].
u64 z_count(const PrimeTable& table, u64 j, const PrimeIndexSet& k1, const PrimeIndexSet& k2);

// Inclusion-exclusion count over all ordered pairs of disjoint non-empty
// subsets of {1..n_primes}: sum of (-1)^(|K1|+|K2|) * z(K1, K2).  Matches
// the both-composite pair count when n_primes covers every prime <= 2j+5.
// Enumeration is refused (resource_error) when n_primes exceeds guard_n.
i64 psi_count_ie(const PrimeTable& table, u64 j, u64 n_primes, u64 guard_n = 16);

// Brute-force check of the sign convention used when pair-level
// inclusion-exclusion terms are collapsed by their index-set support:
// enumerates every subset S of an n x n grid and sums (-1)^(|S|+1) over
// those whose row/column projections are exactly {1..s1} x {1..s2}.
// Equals (-1)^(s1+s2).  Refused for n > 4 (2^(n^2) subsets).
i64 grouping_sign_check(u64 s1, u64 s2, u64 n);

}  // namespace twinsieve
