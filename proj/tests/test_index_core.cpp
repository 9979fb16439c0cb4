#include <doctest.h>

#include <stdexcept>

#include "twinsieve/common.hpp"
#include "twinsieve/index_core.hpp"

namespace {

using twinsieve::i128;
using twinsieve::u128;
using twinsieve::u64;

}  // namespace

TEST_SUITE("index_core") {
  TEST_CASE("odd numbering maps both ways") {
    CHECK(twinsieve::odd_of_index(0) == 3);
    CHECK(twinsieve::odd_of_index(1) == 5);
    CHECK(twinsieve::odd_of_index(4) == 11);
    CHECK(twinsieve::odd_of_index(100) == 203);
    CHECK(twinsieve::index_of_odd(3) == 0);
    CHECK(twinsieve::index_of_odd(25) == 11);
    for (u64 k = 0; k <= 50'000; ++k) {
      if (twinsieve::index_of_odd(twinsieve::odd_of_index(k)) != k) {
        FAIL("roundtrip broke at k=" << k);
      }
    }
    CHECK_THROWS_AS(twinsieve::index_of_odd(0), std::domain_error);
    CHECK_THROWS_AS(twinsieve::index_of_odd(1), std::domain_error);
    CHECK_THROWS_AS(twinsieve::index_of_odd(4), std::domain_error);
    CHECK_THROWS_AS(twinsieve::odd_of_index(~u64(0)), std::overflow_error);
  }

  TEST_CASE("composite indices land on the announced multiples") {
    // k_j(n) = (2j+3) n + j carries the value (2j+3)(2n+1).
    CHECK(twinsieve::composite_index(0, 1) == 3);   // value 9 = 3*3
    CHECK(twinsieve::composite_index(1, 1) == 6);   // value 15 = 5*3
    CHECK(twinsieve::composite_index(1, 2) == 11);  // value 25 = 5*5
    for (u64 j = 0; j <= 40; ++j)
      for (u64 n = 1; n <= 40; ++n) {
        const u64 k = twinsieve::composite_index(j, n);
        CHECK(k == (2 * j + 3) * n + j);
        CHECK(twinsieve::odd_of_index(k) == (2 * j + 3) * (2 * n + 1));
      }
    CHECK_THROWS_AS(twinsieve::composite_index(5, 0), std::domain_error);
  }

  TEST_CASE("remarkable index is the square position") {
    CHECK(twinsieve::remarkable_index(0) == 3);    // value 9 = 3^2
    CHECK(twinsieve::remarkable_index(1) == 11);   // value 25 = 5^2
    CHECK(twinsieve::remarkable_index(2) == 23);   // value 49 = 7^2
    for (u64 j = 0; j <= 2000; ++j) {
      const u64 r = twinsieve::remarkable_index(j);
      CHECK(r == twinsieve::composite_index(j, j + 1));
      CHECK(twinsieve::odd_of_index(r) == (2 * j + 3) * (2 * j + 3));
      // Never the first member of a candidate pair: r mod 3 is 0 or 2.
      CHECK(r % 3 != 1);
    }
  }

  TEST_CASE("counting interval shape") {
    const twinsieve::CountingInterval iv0 = twinsieve::counting_interval(0);
    CHECK(iv0.k_max == 11);
    CHECK(iv0.size == 12);
    CHECK(iv0.n_max == 25);
    const twinsieve::CountingInterval iv41 = twinsieve::counting_interval(41);
    CHECK(iv41.k_max == 3783);
    CHECK(iv41.n_max == 7569);
    for (u64 j = 0; j <= 3000; ++j) {
      const twinsieve::CountingInterval iv = twinsieve::counting_interval(j);
      CHECK(iv.k_max == 2 * j * j + 10 * j + 11);
      CHECK(iv.size == iv.k_max + 1);
      CHECK(iv.n_max == (2 * j + 5) * (2 * j + 5));
      CHECK(twinsieve::odd_of_index(iv.k_max) == iv.n_max);
      CHECK(iv.k_max == twinsieve::remarkable_index(j) + 4 * j + 8);
    }
  }

  TEST_CASE("counting non-negative integers below a bound") {
    CHECK(twinsieve::count_nonneg_ints_leq(2.5) == 3);   // 0, 1, 2
    CHECK(twinsieve::count_nonneg_ints_leq(0.0) == 1);   // just 0
    CHECK(twinsieve::count_nonneg_ints_leq(-0.25) == 0);
    CHECK(twinsieve::count_nonneg_ints_leq(-7.0) == 0);
    CHECK(twinsieve::count_nonneg_ints_leq(i128(5), i128(2)) == 3);
    CHECK(twinsieve::count_nonneg_ints_leq(i128(0), i128(7)) == 1);
    CHECK(twinsieve::count_nonneg_ints_leq(i128(-1), i128(3)) == 0);
    CHECK(twinsieve::count_nonneg_ints_leq(i128(-6), i128(3)) == 0);
    CHECK(twinsieve::count_nonneg_ints_leq(i128(6), i128(3)) == 3);
    CHECK_THROWS_AS(twinsieve::count_nonneg_ints_leq(i128(1), i128(0)), std::domain_error);
    CHECK_THROWS_AS(twinsieve::count_nonneg_ints_leq(i128(1), i128(-2)), std::domain_error);
    // The two evaluation paths agree wherever doubles are exact.
    for (int num = -60; num <= 60; ++num)
      for (int den = 1; den <= 9; ++den) {
        const u64 exact = twinsieve::count_nonneg_ints_leq(i128(num), i128(den));
        const u64 fp = twinsieve::count_nonneg_ints_leq(double(num) / double(den));
        CHECK(exact == fp);
      }
  }

  TEST_CASE("overflow-checked helpers") {
    CHECK(twinsieve::checked_add(3, 4) == 7);
    CHECK(twinsieve::checked_mul(1u << 16, 1u << 16) == (u64(1) << 32));
    CHECK_THROWS_AS(twinsieve::checked_add(~u64(0), 1), std::overflow_error);
    CHECK_THROWS_AS(twinsieve::checked_mul(u64(1) << 33, u64(1) << 33), std::overflow_error);
    CHECK(twinsieve::to_string(u128(0)) == "0");
    CHECK(twinsieve::to_string(u128(1234567890123456789ull)) == "1234567890123456789");
    CHECK(twinsieve::to_string(u128(1) << 127) == "170141183460469231731687303715884105728");
    CHECK(twinsieve::to_string(i128(-42)) == "-42");
    CHECK(twinsieve::floor_div(7, 2) == 3);
    CHECK(twinsieve::floor_div(-7, 2) == -4);
    CHECK(twinsieve::floor_div(-6, 3) == -2);
    CHECK(twinsieve::floor_div(6, 3) == 2);
  }
}
