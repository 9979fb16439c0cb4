#include "twinsieve/crt_psi.hpp"

#include <algorithm>
#include <bit>

#include "twinsieve/index_core.hpp"
#include "twinsieve/primality.hpp"

namespace twinsieve {

namespace {

// Inverse of a modulo p for gcd(a, p) = 1, by the extended Euclid identity.
u64 inv_mod(u64 a, u64 p) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(p), nr = static_cast<i64>(a % p);
  while (nr != 0) {
    const i64 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::logic_error("inv_mod: arguments are not coprime");
  if (t < 0) t += static_cast<i64>(p);
  return static_cast<u64>(t);
}

// Merge x = r (mod m) with x = a (mod p), p prime and coprime to m.
void combine(u128& r, u128& m, u64 a, u64 p) {
  const u64 mr = static_cast<u64>(m % p);
  const u64 delta = (a % p + p - static_cast<u64>(r % p)) % p;
  const u64 k = static_cast<u64>(u128(delta) * inv_mod(mr, p) % p);
  r += m * k;
  m *= p;
}

struct PairSystem {
  u128 r = 5, m = 6;  // y odd and y = 2 (mod 3) collapse to y = 5 (mod 6)
};

void augment_first(PairSystem& s, u64 p) { combine(s.r, s.m, 0, p); }
void augment_second(PairSystem& s, u64 p) { combine(s.r, s.m, p - 2, p); }

// z for one solved pair system inside [0, k_max]: the count of indices
// x = x0 (mod 3*p1*p2) with 0 <= x <= k_max.
u64 z_of_solution(u64 k_max, u128 x0, u128 period) {
  const i128 q = floor_div(i128(k_max) - i128(x0), i128(period)) + 1;
  return q > 0 ? static_cast<u64>(q) : 0;
}

}  // namespace

PrimeIndexSet::PrimeIndexSet(std::vector<u64> indices, const PrimeTable& table)
    : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::domain_error("PrimeIndexSet: set must be non-empty");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::domain_error("PrimeIndexSet: duplicate index");
  if (indices_.front() == 0)
    throw std::domain_error("PrimeIndexSet: index 0 (the prime 3) is carried separately");
  primes_.reserve(indices_.size());
  for (u64 k : indices_) {
    const u64 p = table.odd_prime(k);
    if (product_ > ~u128(0) / p) throw std::overflow_error("PrimeIndexSet: product overflow");
    product_ *= p;
    primes_.push_back(p);
  }
}

CrtSolution solve_y0(const PrimeTable& table, const PrimeIndexSet& k1, const PrimeIndexSet& k2) {
  std::vector<u64> both;
  std::set_intersection(k1.indices().begin(), k1.indices().end(), k2.indices().begin(),
                        k2.indices().end(), std::back_inserter(both));
  if (!both.empty())
    throw std::domain_error(
        "solve_y0: index sets must be disjoint: y and y+2 are consecutive odd "
        "numbers, hence coprime, so no prime can divide both");

  if (k1.product() > (~u128(0) / 6) / k2.product())
    throw std::overflow_error("solve_y0: modulus 6*p1*p2 overflows 128 bits");

  PairSystem sys;
  for (u64 p : k1.primes()) augment_first(sys, p);
  for (u64 p : k2.primes()) augment_second(sys, p);

  CrtSolution s;
  s.p1 = k1.product();
  s.p2 = k2.product();
  s.y0 = sys.r;  // r = 5 (mod 6), so never 0; smallest positive solution
  s.modulus = sys.m;
  // First candidate pair is (y0, y0+2); if either member is prime the pair
  // is not a both-composite pair, and the family starts one period later.
  const bool excluded = is_prime_det(s.y0) || is_prime_det(s.y0 + 2);
  s.case_tag = excluded ? CrtCase::FirstPairExcluded : CrtCase::AllSolutions;
  s.x0 = (s.y0 - 3) / 2 + (excluded ? s.modulus / 2 : 0);
  return s;
}

u128 mirror_y0(const CrtSolution& s) { return s.modulus - s.y0 - 2; }

u64 z_count(const PrimeTable& table, u64 j, const PrimeIndexSet& k1, const PrimeIndexSet& k2) {
  const CountingInterval iv = counting_interval(j);
  const CrtSolution s = solve_y0(table, k1, k2);
  return z_of_solution(iv.k_max, s.x0, s.modulus / 2);
}

namespace {

struct PsiDfs {
  const PrimeTable* table;
  u64 k_max;
  u128 cap1, cap2;  // prune once a product can no longer contribute
  u64 n_primes;
  i64 total = 0;

  void walk(u64 i, PairSystem sys, u128 p1, u128 p2, u64 parity) {
    if (i > n_primes) {
      if (p1 == 1 || p2 == 1) return;  // both sets must be non-empty
      const u128 y0 = sys.r;
      const bool excluded = is_prime_det(y0) || is_prime_det(y0 + 2);
      const u128 x0 = (y0 - 3) / 2 + (excluded ? sys.m / 2 : 0);
      const u64 z = z_of_solution(k_max, x0, sys.m / 2);
      total += (parity & 1) ? -static_cast<i64>(z) : static_cast<i64>(z);
      return;
    }
    const u64 p = table->odd_prime(i);
    walk(i + 1, sys, p1, p2, parity);  // index unused
    if (p1 * p <= cap1) {              // into the first set
      PairSystem s1 = sys;
      augment_first(s1, p);
      walk(i + 1, s1, p1 * p, p2, parity + 1);
    }
    if (p2 * p <= cap2) {  // into the second set
      PairSystem s2 = sys;
      augment_second(s2, p);
      walk(i + 1, s2, p1, p2 * p, parity + 1);
    }
  }
};

}  // namespace

i64 psi_count_ie(const PrimeTable& table, u64 j, u64 n_primes, u64 guard_n) {
  if (n_primes == 0) throw std::domain_error("psi_count_ie: need at least one prime");
  if (n_primes > guard_n)
    throw resource_error("psi_count_ie: n_primes=" + std::to_string(n_primes) +
                         " exceeds the enumeration guard " + std::to_string(guard_n) +
                         " (3^" + std::to_string(n_primes) + " subset pairs)");
  const CountingInterval iv = counting_interval(j);
  table.odd_prime(n_primes);  // fail early if the prime list is too short

  PsiDfs dfs;
  dfs.table = &table;
  dfs.k_max = iv.k_max;
  // A pair contributes z > 0 only if x0 <= k_max, which forces the products
  // to stay at or below the interval's largest value (plus 2 on the shifted
  // side); larger products solve to x0 past the interval for every superset.
  dfs.cap1 = iv.n_max;
  dfs.cap2 = u128(iv.n_max) + 2;
  dfs.n_primes = n_primes;
  dfs.walk(1, PairSystem{}, 1, 1, 0);
  return dfs.total;
}

i64 grouping_sign_check(u64 s1, u64 s2, u64 n) {
  if (s1 == 0 || s2 == 0) throw std::domain_error("grouping_sign_check: set sizes must be >= 1");
  if (s1 + s2 > n) throw std::domain_error("grouping_sign_check: sets do not fit in the grid");
  if (n > 4)
    throw resource_error("grouping_sign_check: n > 4 means over 2^25 grid subsets; refusing");

  const u64 cells = n * n;
  const u64 rows_want = (u64(1) << s1) - 1;
  const u64 cols_want = (u64(1) << s2) - 1;
  i64 total = 0;
  for (u64 mask = 0; mask < (u64(1) << cells); ++mask) {
    u64 rows = 0, cols = 0;
    for (u64 b = mask; b != 0; b &= b - 1) {
      const int cell = std::countr_zero(b);
      rows |= u64(1) << (cell / n);
      cols |= u64(1) << (cell % n);
    }
    if (rows == rows_want && cols == cols_want)
      total += (std::popcount(mask) & 1) ? 1 : -1;  // (-1)^(|S|+1)
  }
  return total;
}

}  // namespace twinsieve
