#include "twinsieve/series_lab.hpp"

#include <numeric>

namespace twinsieve {

namespace {

// (prime, exponent) factorization through the dense spf table.
struct Factor {
  u64 p;
  u32 e;
};

void factorize(const PrimeTable& table, u64 n, std::vector<Factor>& out) {
  out.clear();
  while (n > 1) {
    const u64 p = table.spf(n);
    u32 e = 0;
    while (n % p == 0) n /= p, ++e;
    out.push_back({p, e});
  }
}

i64 ipow(i64 base, u64 exp) {
  i64 r = 1;
  while (exp--) r *= base;
  return r;
}

// Compensated (Kahan) accumulator: the series here alternate and partially
// cancel, so plain summation would smear the low bits we assert on.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

}  // namespace

u64 omega(const PrimeTable& table, u64 n) {
  if (n == 0) throw std::domain_error("omega: n must be >= 1");
  u64 w = 0;
  while (n > 1) {
    const u64 p = table.spf(n);
    while (n % p == 0) n /= p;
    ++w;
  }
  return w;
}

u64 big_omega(const PrimeTable& table, u64 n) {
  if (n == 0) throw std::domain_error("big_omega: n must be >= 1");
  u64 w = 0;
  while (n > 1) {
    n /= table.spf(n);
    ++w;
  }
  return w;
}

int mobius(const PrimeTable& table, u64 n) {
  if (n == 0) throw std::domain_error("mobius: n must be >= 1");
  int w = 0;
  while (n > 1) {
    const u64 p = table.spf(n);
    n /= p;
    if (n % p == 0) return 0;  // square factor
    ++w;
  }
  return (w & 1) ? -1 : 1;
}

i64 mu_a(const PrimeTable& table, i64 a, u64 n) {
  const int mu = mobius(table, n);
  if (mu == 0) return 0;
  return ipow(a, omega(table, n)) * mu;
}

i64 nu(const PrimeTable& table, u64 n) {
  if (n == 0) throw std::domain_error("nu: n must be >= 1");
  if (n == 1) return -1;  // the empty pair term
  if (n % 2 == 0 || n % 3 == 0) return 0;
  u64 w = 0;
  while (n > 1) {
    const u64 p = table.spf(n);
    n /= p;
    if (n % p == 0) return 0;
    ++w;
  }
  const i64 v = ipow(2, w) - 2;
  return (w & 1) ? -v : v;
}

ExactRational e_direct(const PrimeTable& table, u64 n_primes, u64 guard_n) {
  if (n_primes == 0) throw std::domain_error("e_direct: need at least one prime");
  if (n_primes > guard_n)
    throw resource_error("e_direct: 3^" + std::to_string(n_primes) +
                         " assignments exceed the guard (" + std::to_string(guard_n) + ")");

  // Common denominator D = (p_1 ... p_N)^2 divides every P_K1 * P_K2, so
  // the whole sum accumulates exactly in one big integer.
  BigInt d = 1;
  for (u64 i = 1; i <= n_primes; ++i) d *= table.odd_prime(i);
  d *= d;

  BigInt num = 0;
  // Ternary DFS over assignments {unused, K1, K2}, exactly as the pair
  // enumeration is defined; products fit u128 for N <= 12 (p <= 41).
  auto walk = [&](auto&& self, u64 i, u128 p1, u128 p2, u64 parity) -> void {
    if (i > n_primes) {
      if (p1 == 1 || p2 == 1) return;
      const BigInt t = d / BigInt(p1 * p2);
      if (parity & 1)
        num -= t;
      else
        num += t;
      return;
    }
    const u64 p = table.odd_prime(i);
    self(self, i + 1, p1, p2, parity);
    self(self, i + 1, p1 * p, p2, parity + 1);
    self(self, i + 1, p1, p2 * p, parity + 1);
  };
  walk(walk, 1, 1, 1, 0);
  return ExactRational(num, d);
}

ExactRational e_product_exact(const PrimeTable& table, u64 n_primes, u64 guard_n) {
  if (n_primes == 0) throw std::domain_error("e_product_exact: need at least one prime");
  if (n_primes > guard_n)
    throw resource_error("e_product_exact: N=" + std::to_string(n_primes) +
                         " exceeds the exact-arithmetic guard (" + std::to_string(guard_n) +
                         "); use the floating-point form");
  BigInt num_a = 1, num_b = 1, den = 1;
  for (u64 i = 1; i <= n_primes; ++i) {
    const u64 p = table.odd_prime(i);
    num_a *= (p - 2);
    num_b *= (p - 1);
    den *= p;
  }
  return ExactRational(den + num_a - 2 * num_b, den);
}

double e_product_fp(const PrimeTable& table, u64 n_primes) {
  if (n_primes == 0) throw std::domain_error("e_product_fp: need at least one prime");
  double a = 1.0, b = 1.0;
  for (u64 i = 1; i <= n_primes; ++i) {
    const double p = static_cast<double>(table.odd_prime(i));
    a *= 1.0 - 2.0 / p;
    b *= 1.0 - 1.0 / p;
  }
  return 1.0 + a - 2.0 * b;
}

std::vector<double> e_product_prefix(const PrimeTable& table, u64 n_primes) {
  if (n_primes == 0) throw std::domain_error("e_product_prefix: need at least one prime");
  std::vector<double> out;
  out.reserve(n_primes);
  double a = 1.0, b = 1.0;
  for (u64 i = 1; i <= n_primes; ++i) {
    const double p = static_cast<double>(table.odd_prime(i));
    a *= 1.0 - 2.0 / p;
    b *= 1.0 - 1.0 / p;
    out.push_back(1.0 + a - 2.0 * b);
  }
  return out;
}

std::vector<SeriesPoint> m_series(const PrimeTable& table, u64 n_max) {
  if (n_max == 0) throw std::domain_error("m_series: need n >= 1");
  std::vector<SeriesPoint> out;
  out.reserve(n_max);
  KahanSum sum;
  for (u64 k = 1; k <= n_max; ++k) {
    const u64 v = 2 * k + 1;
    const i64 w = nu(table, v);
    if (w != 0) sum.add(static_cast<double>(w) / static_cast<double>(v));
    out.push_back({k, sum.s});
  }
  return out;
}

std::vector<SeriesPoint> s_b_series(const PrimeTable& table, u64 b, u64 n_max) {
  if (b == 0) throw std::domain_error("s_b_series: b must be >= 1");
  if (n_max == 0) throw std::domain_error("s_b_series: need n >= 1");
  std::vector<SeriesPoint> out;
  out.reserve(n_max);
  KahanSum sum;
  for (u64 k = 1; k <= n_max; ++k) {
    if (std::gcd(k, b) == 1) {
      const i64 w = mu_a(table, 2, k);
      if (w != 0) sum.add(static_cast<double>(w) / static_cast<double>(k));
    }
    out.push_back({k, sum.s});
  }
  return out;
}

std::vector<SeriesPoint> s_series(const PrimeTable& table, u64 n_max) {
  return s_b_series(table, 1, n_max);
}

DivisorSumIdentity divisor_sum_check(const PrimeTable& table, i64 a, u64 n) {
  if (n == 0) throw std::domain_error("divisor_sum_check: n must be >= 1");
  std::vector<Factor> fs;
  factorize(table, n, fs);

  i64 lhs_plain = 0, lhs_weighted = 0;
  std::vector<u64> divisors{1};
  for (const Factor& f : fs) {
    const std::size_t sz = divisors.size();
    u64 pe = 1;
    for (u32 e = 1; e <= f.e; ++e) {
      pe *= f.p;
      for (std::size_t i = 0; i < sz; ++i) divisors.push_back(divisors[i] * pe);
    }
  }
  const u64 bigw_n = big_omega(table, n);
  for (u64 d : divisors) {
    const i64 w = mu_a(table, a, d);
    lhs_plain += w;
    if (w != 0) lhs_weighted += w * ipow(a, bigw_n - big_omega(table, d));
  }

  DivisorSumIdentity r;
  r.lhs_plain = lhs_plain;
  r.rhs_plain = ipow(1 - a, omega(table, n));
  r.lhs_weighted = lhs_weighted;
  r.rhs_weighted = (n == 1) ? 1 : 0;
  return r;
}

FloorSumIdentity floor_sum_check(const PrimeTable& table, i64 a, u64 n) {
  if (n == 0) throw std::domain_error("floor_sum_check: n must be >= 1");
  FloorSumIdentity r{0, 0};
  for (u64 k = 1; k <= n; ++k) {
    const i64 w = mu_a(table, a, k);
    if (w != 0) r.lhs += w * static_cast<i64>(n / k);
    r.rhs += ipow(1 - a, omega(table, k));
  }
  return r;
}

}  // namespace twinsieve
