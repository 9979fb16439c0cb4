#include <doctest.h>

#include <array>
#include <stdexcept>

#include "test_util.hpp"
#include "twinsieve/count_forms.hpp"
#include "twinsieve/count_report.hpp"
#include "twinsieve/prime_oracle.hpp"

namespace {

using twinsieve::i64;
using twinsieve::u64;
using twinsieve::BFormulaMode;
using twinsieve::testing::shared_table;

}  // namespace

TEST_SUITE("count_forms") {
  TEST_CASE("closed forms for the filtered set and the pair set") {
    CHECK(twinsieve::a_count(0) == 8);
    CHECK(twinsieve::a_count(3) == 40);
    CHECK(twinsieve::a_count(41) == 2522);
    CHECK(twinsieve::gamma_count(0) == 4);
    CHECK(twinsieve::gamma_count(41) == 1261);
    const twinsieve::PrimeTable& t = shared_table();
    for (u64 j = 0; j <= 150; ++j) {
      const twinsieve::IntervalCounts c = twinsieve::interval_counts(t, j);
      CHECK(twinsieve::a_count(j) == c.a);
      CHECK(twinsieve::gamma_count(j) == c.gamma);
      CHECK(twinsieve::a_count(j) == 2 * twinsieve::gamma_count(j));
    }
  }

  TEST_CASE("composite count via the prime-counting function") {
    const twinsieve::PrimeTable& t = shared_table();
    CHECK(twinsieve::b_count_exact(t, 0) == 1);
    CHECK(twinsieve::b_count_exact(t, 1) == 3);
    CHECK(twinsieve::b_count_exact(t, 3) == 12);
    CHECK(twinsieve::b_count_exact(t, 41) == 1564);
    for (u64 j = 0; j <= 150; ++j)
      CHECK(twinsieve::b_count_exact(t, j) == twinsieve::interval_counts(t, j).b);
  }

  TEST_CASE("subset sum, repaired mode: equals the scans") {
    const twinsieve::PrimeTable& t = shared_table();
    CHECK(twinsieve::b_count_inclusion_exclusion(t, 0, 2, BFormulaMode::Repaired) == 1);
    CHECK(twinsieve::b_count_inclusion_exclusion(t, 1, 3, BFormulaMode::Repaired) == 3);
    // Full prime budget reproduces the unrestricted composite count ...
    for (u64 j = 0; j <= 60; ++j) {
      const u64 n_full = twinsieve::pi_counts(t, j).pi_dprime;
      CHECK(twinsieve::b_count_inclusion_exclusion(t, j, n_full, BFormulaMode::Repaired) ==
            static_cast<i64>(twinsieve::interval_counts(t, j).b));
    }
    // ... and partial budgets reproduce the restricted scans.
    for (u64 j = 0; j <= 40; ++j)
      for (u64 n = 1; n <= 7; ++n)
        CHECK(twinsieve::b_count_inclusion_exclusion(t, j, n, BFormulaMode::Repaired) ==
              static_cast<i64>(twinsieve::oracle_restricted(t, j, n).b_n));
  }

  TEST_CASE("subset sum, literal mode: pinned departures from the scan") {
    const twinsieve::PrimeTable& t = shared_table();
    // The literal floor terms go negative; at j = 0 the result is 3 although
    // the set being counted has exactly 1 element.
    CHECK(twinsieve::b_count_inclusion_exclusion(t, 0, 2, BFormulaMode::AsPrinted) == 3);
    CHECK(twinsieve::interval_counts(t, 0).b == 1);
    // Each additional prime <= 25 shifts the literal value up by one; primes
    // beyond the interval ceiling inject only cancelling -1 floors, so the
    // value plateaus.  All frozen against a direct subset-sum evaluation.
    const std::array<i64, 9> literal_j0 = {3, 4, 5, 6, 7, 8, 8, 8, 8};  // n = 2..10
    for (u64 n = 2; n <= 10; ++n)
      CHECK(twinsieve::b_count_inclusion_exclusion(t, 0, n, BFormulaMode::AsPrinted) ==
            literal_j0[n - 2]);
    CHECK(twinsieve::b_count_inclusion_exclusion(t, 1, 2, BFormulaMode::AsPrinted) == 5);
    CHECK(twinsieve::b_count_inclusion_exclusion(t, 1, 7, BFormulaMode::AsPrinted) == 10);
  }

  TEST_CASE("subset sum: guards and argument errors") {
    const twinsieve::PrimeTable& t = shared_table();
    CHECK_THROWS_AS(twinsieve::b_count_inclusion_exclusion(t, 0, 0, BFormulaMode::Repaired),
                    std::domain_error);
    CHECK_THROWS_AS(
        twinsieve::b_count_inclusion_exclusion(t, 0, 25, BFormulaMode::AsPrinted, 1000),
        twinsieve::resource_error);
    CHECK_THROWS_AS(twinsieve::b_count_inclusion_exclusion(t, 0, 80, BFormulaMode::AsPrinted),
                    twinsieve::resource_error);
    // Repaired mode prunes instead of enumerating, so wide budgets are fine.
    CHECK(twinsieve::b_count_inclusion_exclusion(t, 10, 40, BFormulaMode::Repaired) ==
          static_cast<i64>(twinsieve::interval_counts(t, 10).b));
  }

  TEST_CASE("moebius transcription: pinned values") {
    const twinsieve::PrimeTable& t = shared_table();
    CHECK(twinsieve::b_count_mobius_printed(t, 0) == 3);
    CHECK(twinsieve::b_count_mobius_printed(t, 1) == 8);
    CHECK(twinsieve::b_count_mobius_printed(t, 2) == 17);
    CHECK(twinsieve::b_count_mobius_printed(t, 3) == 30);
  }

  TEST_CASE("twin count through the partition identity") {
    const twinsieve::PrimeTable& t = shared_table();
    for (u64 j = 0; j <= 120; ++j)
      CHECK(twinsieve::pi_count_via_identity(t, j, twinsieve::PsiSource::Oracle) ==
            static_cast<i64>(twinsieve::interval_counts(t, j).pi));
    // The formula-backed path enumerates 3^N pairs, so keep N small here.
    for (u64 j = 0; j <= 7; ++j)
      CHECK(twinsieve::pi_count_via_identity(t, j, twinsieve::PsiSource::Formula) ==
            static_cast<i64>(twinsieve::interval_counts(t, j).pi));
    CHECK_THROWS_AS(twinsieve::pi_count_via_identity(t, 200, twinsieve::PsiSource::Formula, 12),
                    twinsieve::resource_error);
  }

  TEST_CASE("count report: every field cross-checked at a frozen row") {
    const twinsieve::PrimeTable& t = shared_table();
    const twinsieve::CountReport r = twinsieve::build_count_report(t, 41);
    CHECK(r.j == 41);
    CHECK(r.k_max == 3783);
    CHECK(r.a == 2522);
    CHECK(r.gamma == 1261);
    CHECK(r.b_oracle == 1564);
    CHECK(r.b_exact == 1564);
    CHECK(r.b_ie_repaired == 1564);
    CHECK(r.psi_oracle == 473);
    CHECK(r.pi_oracle == 170);
    CHECK(r.pi_via_identity == 170);
    CHECK(r.xi_oracle == 618);
    // 22 primes participate at j = 41: past the pair-formula guard of 12,
    // within the literal subset guard of 2^24.
    CHECK_FALSE(r.psi_ie.has_value());
    CHECK(r.b_ie_printed.has_value());
    CHECK(r.b_mobius_printed.has_value());
  }

  TEST_CASE("count report: guards decide which optional fields appear") {
    const twinsieve::PrimeTable& t = shared_table();
    const twinsieve::CountReport r0 = twinsieve::build_count_report(t, 0);
    REQUIRE(r0.psi_ie.has_value());
    CHECK(*r0.psi_ie == 0);
    REQUIRE(r0.b_ie_printed.has_value());
    CHECK(*r0.b_ie_printed == 3);
    REQUIRE(r0.b_mobius_printed.has_value());
    CHECK(*r0.b_mobius_printed == 3);

    // j = 46 is the first row whose 2^(N+1)-2 literal subsets exceed 2^24.
    const twinsieve::CountReport r46 = twinsieve::build_count_report(t, 46);
    CHECK_FALSE(r46.b_ie_printed.has_value());
    CHECK_FALSE(r46.psi_ie.has_value());
    CHECK(r46.b_mobius_printed.has_value());
    twinsieve::ReportOptions wide;
    wide.printed_term_guard = u64(1) << 26;
    const twinsieve::CountReport r46w = twinsieve::build_count_report(t, 46, wide);
    CHECK(r46w.b_ie_printed.has_value());

    for (u64 j = 0; j <= 30; ++j) {
      const twinsieve::CountReport r = twinsieve::build_count_report(t, j);
      CHECK(r.pi_oracle + r.b_oracle == r.gamma + r.psi_oracle);
      CHECK(r.xi_oracle + 2 * r.psi_oracle == r.b_oracle);
      CHECK(r.b_ie_repaired == static_cast<i64>(r.b_oracle));
      CHECK(r.pi_via_identity == static_cast<i64>(r.pi_oracle));
      if (r.psi_ie) CHECK(*r.psi_ie == static_cast<i64>(r.psi_oracle));
    }
  }
}
