#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "twinsieve/prime_table.hpp"

namespace twinsieve {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

// --- arithmetic functions (factored via the dense spf table) -----------

u64 omega(const PrimeTable& table, u64 n);      // distinct prime factors
u64 big_omega(const PrimeTable& table, u64 n);  // prime factors with multiplicity
int mobius(const PrimeTable& table, u64 n);

// Generalized Moebius weight A^omega(n) * mu(n).
i64 mu_a(const PrimeTable& table, i64 a, u64 n);

// Pair-counting weight: for squarefree n coprime to 6 with w distinct prime
// factors, (-1)^w (2^w - 2); at n = 1 the empty product carries weight -1;
// zero elsewhere (non-squarefree, or divisible by 2 or 3).
i64 nu(const PrimeTable& table, u64 n);

// --- the alternating pair sum E_N ---------------------------------------

// Direct double alternating sum over ordered pairs of disjoint non-empty
// subsets of {1..N}: sum (-1)^(|K1|+|K2|) / (P_K1 * P_K2), exact.
// Enumerates 3^N assignments; refused past guard_n.
ExactRational e_direct(const PrimeTable& table, u64 n_primes, u64 guard_n = 12);

// Same value in closed product form:
// 1 + prod_{k=1..N}(1 - 2/p_k) - 2 prod_{k=1..N}(1 - 1/p_k).
ExactRational e_product_exact(const PrimeTable& table, u64 n_primes, u64 guard_n = 64);
double e_product_fp(const PrimeTable& table, u64 n_primes);

// E_1..E_n in one pass (doubles); the cheap way to scan monotonicity.
std::vector<double> e_product_prefix(const PrimeTable& table, u64 n_primes);

// --- partial-sum series --------------------------------------------------

struct SeriesPoint {
  u64 n;
  double value;
};

// M_n = sum_{k=1..n} nu(2k+1) / (2k+1); compensated summation.
std::vector<SeriesPoint> m_series(const PrimeTable& table, u64 n_max);

// S_n = sum_{k=1..n} mu_2(k) / k, and the variant restricted to k coprime
// to b.  |S_n| is provably bounded by 2.
std::vector<SeriesPoint> s_series(const PrimeTable& table, u64 n_max);
std::vector<SeriesPoint> s_b_series(const PrimeTable& table, u64 b, u64 n_max);

// --- divisor-sum and floor-sum identities --------------------------------

struct DivisorSumIdentity {
  i64 lhs_plain, rhs_plain;        // sum_{d|n} mu_A(d)  vs  (1-A)^omega(n)
  i64 lhs_weighted, rhs_weighted;  // sum_{d|n} mu_A(d) A^bigomega(n/d)  vs  [n=1]
};
DivisorSumIdentity divisor_sum_check(const PrimeTable& table, i64 a, u64 n);

struct FloorSumIdentity {
  i64 lhs, rhs;  // sum_{k<=n} mu_A(k) floor(n/k)  vs  sum_{j<=n} (1-A)^omega(j)
};
FloorSumIdentity floor_sum_check(const PrimeTable& table, i64 a, u64 n);

}  // namespace twinsieve
