#pragma once

#include "twinsieve/common.hpp"

namespace twinsieve {

// Everything here works on the indexing N_k = 2k + 3 of the odd numbers
// >= 3.  Index 0 is the value 3, index 1 is 5, and so on.

// The index range [0, k_max] scanned for a given parameter j, together with
// the largest odd value it reaches.
struct CountingInterval {
  u64 j;
  u64 k_max;  // 2j^2 + 10j + 11
  u64 size;   // k_max + 1
  u64 n_max;  // (2j+5)^2 = value at index k_max
};

u64 odd_of_index(u64 k);  // k -> 2k + 3
u64 index_of_odd(u64 n);  // 2k+3 -> k; rejects even values and values < 3

// Index of the n-th proper odd multiple of the odd number at index j:
// k_j(n) = (2j+3)n + j, defined for n >= 1.  The value at that index is
// (2j+3)(2n+1).
u64 composite_index(u64 j, u64 n);

// k_j(j+1) = 2j^2 + 6j + 3, whose value is the perfect square (2j+3)^2.
u64 remarkable_index(u64 j);

CountingInterval counting_interval(u64 j);

// Number of non-negative integers <= x, i.e. the positive part of
// floor(x + 1).  The second overload evaluates x = num/den exactly.
u64 count_nonneg_ints_leq(double x);
u64 count_nonneg_ints_leq(i128 num, i128 den);

}  // namespace twinsieve
