#include "twinsieve/prime_oracle.hpp"

#include <algorithm>

namespace twinsieve {

namespace {

void require_coverage(const PrimeTable& table, u64 n_max) {
  if (n_max > table.limit())
    throw resource_error("prime table covers only " + std::to_string(table.limit()) +
                         ", need " + std::to_string(n_max));
}

// Validates an oracle_y0 index set pair and returns the prime products.
std::pair<u64, u64> y0_products(const PrimeTable& table, std::span<const u64> k1,
                                std::span<const u64> k2) {
  if (k1.empty() || k2.empty())
    throw std::domain_error("oracle_y0: index sets must be non-empty");
  auto product = [&](std::span<const u64> ks) {
    u64 p = 1;
    for (u64 k : ks) {
      if (k == 0)
        throw std::domain_error("oracle_y0: index 0 (the prime 3) is carried separately");
      p = checked_mul(p, table.odd_prime(k));
    }
    return p;
  };
  std::vector<u64> a(k1.begin(), k1.end()), b(k2.begin(), k2.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end() ||
      std::adjacent_find(b.begin(), b.end()) != b.end())
    throw std::domain_error("oracle_y0: index sets must not contain duplicates");
  std::vector<u64> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  if (!both.empty())
    throw std::domain_error(
        "oracle_y0: index sets must be disjoint (two odd numbers 2 apart share no odd prime factor)");
  return {product(k1), product(k2)};
}

}  // namespace

PiCounts pi_counts(const PrimeTable& table, u64 j) {
  const CountingInterval iv = counting_interval(j);
  require_coverage(table, iv.n_max);
  PiCounts c;
  c.pi_sq = table.pi(iv.n_max);
  c.pi_prime = c.pi_sq - 2;                         // drop 2 and 3
  c.pi_dprime = table.pi(odd_of_index(j) + 2) - 1;  // odd primes 3..2j+5
  return c;
}

ClassifiedInterval classify_interval(const PrimeTable& table, u64 j) {
  const CountingInterval iv = counting_interval(j);
  require_coverage(table, iv.n_max);

  ClassifiedInterval r;
  r.j = j;
  r.interval = iv;
  for (u64 k = 0; k <= iv.k_max; ++k) {
    if (k % 3 == 0) continue;  // value 2k+3 divisible by 3
    r.a_set.push_back(k);
    if (!table.is_prime(odd_of_index(k))) r.b_set.push_back(k);
  }
  for (u64 k1 = 1; k1 + 1 <= iv.k_max; k1 += 3) {
    const u64 k2 = k1 + 1;
    r.gamma.emplace_back(k1, k2);
    const bool p1 = table.is_prime(odd_of_index(k1));
    const bool p2 = table.is_prime(odd_of_index(k2));
    if (p1 && p2)
      r.pi_pairs.emplace_back(k1, k2);
    else if (!p1 && !p2)
      r.psi_pairs.emplace_back(k1, k2);
    else
      r.xi_pairs.emplace_back(k1, k2);
  }
  return r;
}

IntervalCounts interval_counts(const PrimeTable& table, u64 j) {
  const CountingInterval iv = counting_interval(j);
  require_coverage(table, iv.n_max);

  IntervalCounts c;
  for (u64 k = 0; k <= iv.k_max; ++k) {
    if (k % 3 == 0) continue;
    ++c.a;
    if (!table.is_prime(odd_of_index(k))) ++c.b;
  }
  for (u64 k1 = 1; k1 + 1 <= iv.k_max; k1 += 3) {
    ++c.gamma;
    const bool p1 = table.is_prime(odd_of_index(k1));
    const bool p2 = table.is_prime(odd_of_index(k1 + 1));
    if (p1 && p2)
      ++c.pi;
    else if (!p1 && !p2)
      ++c.psi;
    else
      ++c.xi;
  }
  return c;
}

RestrictedCounts oracle_restricted(const PrimeTable& table, u64 j, u64 n_primes) {
  if (n_primes == 0) throw std::domain_error("oracle_restricted: need at least one prime");
  const CountingInterval iv = counting_interval(j);

  std::vector<u64> primes;
  primes.reserve(n_primes);
  for (u64 i = 1; i <= n_primes; ++i) primes.push_back(table.odd_prime(i));

  // Value 2k+3 is a proper odd multiple of p: divisible by p and not p itself.
  auto hit = [&](u64 k) {
    const u64 n = odd_of_index(k);
    for (u64 p : primes)
      if (n % p == 0 && n != p) return true;
    return false;
  };

  RestrictedCounts c;
  for (u64 k = 0; k <= iv.k_max; ++k) {
    if (k % 3 == 0) continue;
    if (hit(k)) ++c.b_n;
  }
  for (u64 k1 = 1; k1 + 1 <= iv.k_max; k1 += 3)
    if (hit(k1) && hit(k1 + 1)) ++c.psi_n;
  return c;
}

std::optional<u64> oracle_y0(const PrimeTable& table, std::span<const u64> k1,
                             std::span<const u64> k2, u64 scan_limit) {
  const auto [p1, p2] = y0_products(table, k1, k2);

  // Walk the sparser lattice: odd multiples of the larger product, checking
  // the two remaining congruences by plain remainders.  Candidates are
  // visited in increasing order, so the first hit is the smallest solution.
  if (p1 >= p2) {
    const u64 t_max = scan_limit / p1;
    for (u64 t = 1; t <= t_max; t += 2) {  // y = p1, 3*p1, 5*p1, ...
      const u64 y = t * p1;
      if (y % 3 == 2 && (y + 2) % p2 == 0) return y;
    }
    return std::nullopt;
  }
  const u64 t_max = checked_add(scan_limit, 2) / p2;
  for (u64 t = 1; t <= t_max; t += 2) {  // y + 2 = p2, 3*p2, 5*p2, ...
    const u64 y = t * p2 - 2;
    if (y % 3 == 2 && y % p1 == 0) return y;
  }
  return std::nullopt;
}

}  // namespace twinsieve
