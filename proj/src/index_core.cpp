#include "twinsieve/index_core.hpp"

#include <cmath>

namespace twinsieve {

u64 odd_of_index(u64 k) { return checked_add(checked_mul(2, k), 3); }

u64 index_of_odd(u64 n) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("index_of_odd: value must be an odd number >= 3");
  return (n - 3) / 2;
}

u64 composite_index(u64 j, u64 n) {
  if (n == 0) throw std::domain_error("composite_index: multiple count n must be >= 1");
  const u64 step = odd_of_index(j);  // 2j + 3
  return checked_add(checked_mul(step, n), j);
}

u64 remarkable_index(u64 j) {
  // 2j^2 + 6j + 3 = composite_index(j, j + 1)
  return checked_add(checked_mul(checked_mul(2, j), j), checked_add(checked_mul(6, j), 3));
}

CountingInterval counting_interval(u64 j) {
  CountingInterval iv;
  iv.j = j;
  // k_max = 2j^2 + 10j + 11
  iv.k_max = checked_add(checked_mul(checked_mul(2, j), j), checked_add(checked_mul(10, j), 11));
  iv.size = checked_add(iv.k_max, 1);
  const u64 side = checked_add(checked_mul(2, j), 5);
  iv.n_max = checked_mul(side, side);
  return iv;
}

u64 count_nonneg_ints_leq(double x) {
  const double f = std::floor(x) + 1.0;
  if (f <= 0.0) return 0;
  return static_cast<u64>(f);
}

u64 count_nonneg_ints_leq(i128 num, i128 den) {
  if (den <= 0) throw std::domain_error("count_nonneg_ints_leq: denominator must be positive");
  const i128 q = floor_div(num, den) + 1;
  if (q <= 0) return 0;
  return static_cast<u64>(q);
}

}  // namespace twinsieve
