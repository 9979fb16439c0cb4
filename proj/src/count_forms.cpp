#include "twinsieve/count_forms.hpp"

#include "twinsieve/crt_psi.hpp"
#include "twinsieve/index_core.hpp"
#include "twinsieve/prime_oracle.hpp"
#include "twinsieve/series_lab.hpp"

namespace twinsieve {

u64 a_count(u64 j) {
  const CountingInterval iv = counting_interval(j);
  return checked_mul(2, iv.size) / 3;
}

u64 gamma_count(u64 j) { return counting_interval(j).size / 3; }

u64 b_count_exact(const PrimeTable& table, u64 j) {
  return a_count(j) - pi_counts(table, j).pi_sq + 2;
}

namespace {

struct IeDfs {
  const PrimeTable* table;
  u128 m;  // (2j+5)^2
  u64 n_primes;
  BFormulaMode mode;
  i64 total = 0;

  i64 term(u128 p, u64 size, bool singleton_above_zero) const {
    if (mode == BFormulaMode::AsPrinted)
      return static_cast<i64>(floor_div(i128(m) - i128(p), i128(2) * i128(p)));
    const u128 u = m / p;  // largest multiple count; p <= m here (pruned)
    if (singleton_above_zero) {
      // The multiple m' = 1 would be the prime p itself: count odd m' >= 3.
      return u >= 3 ? static_cast<i64>((u + 1) / 2 - 1) : 0;
    }
    return static_cast<i64>((u + 1) / 2);  // odd multiples m' >= 1
  }

  // Visits subsets in lexicographic order of their sorted index lists.
  void walk(u64 next, u128 p, u64 size) {
    for (u64 i = next; i <= n_primes; ++i) {
      // Saturate past M: every such AsPrinted term is exactly -1 (the floor
      // of a ratio in (-1/2, 0)), so the product's magnitude is irrelevant
      // and the saturation cannot overflow 128 bits.
      const u128 np = (p > m) ? m + 1 : p * table->odd_prime(i);
      if (mode == BFormulaMode::Repaired && np > m) break;  // primes ascend; the rest are dead
      const u64 nsize = size + 1;
      if (!(nsize == 1 && i == 0)) {  // K = {0} carries no term
        const i64 t = term(np, nsize, nsize == 1 && i > 0);
        total += (nsize & 1) ? t : -t;
      }
      walk(i + 1, np, nsize);
    }
  }
};

}  // namespace

i64 b_count_inclusion_exclusion(const PrimeTable& table, u64 j, u64 n_primes, BFormulaMode mode,
                                u64 term_guard) {
  if (n_primes == 0) throw std::domain_error("b_count_inclusion_exclusion: need N >= 1");
  if (mode == BFormulaMode::AsPrinted) {
    if (n_primes + 1 >= 63 || ((u64(1) << (n_primes + 1)) - 2) > term_guard)
      throw resource_error("b_count_inclusion_exclusion: 2^" + std::to_string(n_primes + 1) +
                           " subsets exceed the term guard " + std::to_string(term_guard));
  }
  table.odd_prime(n_primes);  // fail early if the prime list is too short

  IeDfs dfs;
  dfs.table = &table;
  dfs.m = counting_interval(j).n_max;
  dfs.n_primes = n_primes;
  dfs.mode = mode;
  dfs.walk(0, 1, 0);
  return dfs.total;
}

i64 b_count_mobius_printed(const PrimeTable& table, u64 j) {
  const CountingInterval iv = counting_interval(j);
  i64 total = 0;
  for (u64 k = 1; k <= iv.k_max; ++k) {
    const u64 v = odd_of_index(k);
    const int mu = mobius(table, v);
    if (mu != 0) total += i64(mu) * static_cast<i64>((iv.k_max - k) / v);
  }
  return -total;
}

i64 pi_count_via_identity(const PrimeTable& table, u64 j, PsiSource source, u64 psi_guard) {
  i64 psi;
  if (source == PsiSource::Oracle) {
    psi = static_cast<i64>(interval_counts(table, j).psi);
  } else {
    psi = psi_count_ie(table, j, pi_counts(table, j).pi_dprime, psi_guard);
  }
  return static_cast<i64>(gamma_count(j)) - static_cast<i64>(b_count_exact(table, j)) + psi;
}

}  // namespace twinsieve
