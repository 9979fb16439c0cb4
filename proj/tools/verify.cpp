#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "report_io.hpp"
#include "twinsieve/count_forms.hpp"
#include "twinsieve/count_report.hpp"
#include "twinsieve/crt_psi.hpp"
#include "twinsieve/index_core.hpp"
#include "twinsieve/prime_oracle.hpp"
#include "twinsieve/residue_wheel.hpp"
#include "twinsieve/series_lab.hpp"

namespace twinsieve::cli {

namespace {

// One named check accumulating assertions; the first failing assertion's
// detail string is kept for the summary.
struct Check {
  std::string name;
  u64 asserts = 0;
  bool ok = true;
  std::string detail;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;

  Check& begin(std::string n) {
    checks.push_back(Check{std::move(n), 0, true, {}});
    return checks.back();
  }
};

// The detail is built lazily: most checks assert millions of times and
// almost never fail.
template <class Fn>
void expect(Check& c, bool ok, Fn&& detail) {
  ++c.asserts;
  if (!ok && c.ok) {
    c.ok = false;
    c.detail = detail();
  }
}

std::string at_j(u64 j) { return "j=" + std::to_string(j); }
std::string at_jn(u64 j, u64 n) { return "j=" + std::to_string(j) + " n=" + std::to_string(n); }

// ---------------------------------------------------------------- counts --

void suite_counts(Suite& s, const PrimeTable& t, u64 max_j) {
  const u64 J = std::min<u64>(max_j, 500);
  const u64 J200 = std::min<u64>(max_j, 200);
  const u64 J100 = std::min<u64>(max_j, 100);

  {
    Check& c = s.begin("index_roundtrip");
    for (u64 k = 0; k <= 1'000'000; ++k)
      expect(c, index_of_odd(odd_of_index(k)) == k, [&] { return "k=" + std::to_string(k); });
  }
  {
    Check& c = s.begin("composite_index_value");
    for (u64 j = 0; j <= 1000; ++j)
      for (u64 n = 1; n <= 1000; ++n)
        expect(c, odd_of_index(composite_index(j, n)) == (2 * j + 3) * (2 * n + 1),
               [&] { return at_jn(j, n); });
  }
  {
    Check& c = s.begin("remarkable_index_mod3");
    for (u64 j = 0; j <= 10'000; ++j)
      expect(c, remarkable_index(j) % 3 != 1, [&] { return at_j(j); });
  }
  {
    Check& c = s.begin("interval_shape");
    for (u64 j = 0; j <= 10'000; ++j) {
      const CountingInterval iv = counting_interval(j);
      expect(c,
             iv.k_max == 2 * j * j + 10 * j + 11 && iv.size == iv.k_max + 1 &&
                 iv.n_max == (2 * j + 5) * (2 * j + 5) && iv.n_max == odd_of_index(iv.k_max) &&
                 iv.k_max == remarkable_index(j) + 4 * j + 8,
             [&] { return at_j(j); });
    }
  }
  {
    Check& c = s.begin("table_spf_prime_fixed_points");
    for (u64 n = 2; n <= 100'000; ++n)
      expect(c, (t.spf(n) == n) == t.is_prime(n), [&] { return "n=" + std::to_string(n); });
  }
  {
    Check& c = s.begin("table_prime_index_mod3");
    expect(c, t.odd_prime(0) == 3, [] { return std::string("p_0"); });
    for (u64 i = 1; i < t.odd_prime_count(); ++i) {
      expect(c, index_of_odd(t.odd_prime(i)) % 3 != 0,
             [&] { return "i=" + std::to_string(i); });
      expect(c, t.prime_index(i) == (t.odd_prime(i) - 3) / 2,
             [&] { return "i=" + std::to_string(i); });
    }
  }

  std::vector<IntervalCounts> oc(J + 1);
  std::vector<PiCounts> pc(J + 1);
  for (u64 j = 0; j <= J; ++j) {
    oc[j] = interval_counts(t, j);
    pc[j] = pi_counts(t, j);
  }

  {
    Check& c = s.begin("scan_a_is_twice_gamma");
    for (u64 j = 0; j <= J; ++j)
      expect(c, oc[j].a == 2 * oc[j].gamma, [&] { return at_j(j); });
  }
  {
    Check& c = s.begin("scan_pair_partition");
    for (u64 j = 0; j <= J; ++j) {
      expect(c, oc[j].pi + oc[j].psi + oc[j].xi == oc[j].gamma, [&] { return at_j(j); });
      expect(c, oc[j].pi + oc[j].b == oc[j].gamma + oc[j].psi, [&] { return at_j(j); });
      expect(c, oc[j].xi + 2 * oc[j].psi == oc[j].b, [&] { return at_j(j); });
    }
  }
  {
    Check& c = s.begin("scan_b_is_a_minus_pi_prime");
    for (u64 j = 0; j <= J; ++j)
      expect(c, oc[j].b + pc[j].pi_prime == oc[j].a, [&] { return at_j(j); });
  }
  {
    Check& c = s.begin("scan_pi_at_most_half_pi_prime");
    for (u64 j = 0; j <= J; ++j)
      expect(c, 2 * oc[j].pi <= pc[j].pi_prime, [&] { return at_j(j); });
  }
  {
    Check& c = s.begin("classified_sets_coherent");
    for (u64 j = 0; j <= std::min<u64>(J, 10); ++j) {
      const ClassifiedInterval ci = classify_interval(t, j);
      expect(c,
             ci.a_set.size() == oc[j].a && ci.b_set.size() == oc[j].b &&
                 ci.gamma.size() == oc[j].gamma,
             [&] { return at_j(j); });
      expect(c,
             ci.pi_pairs.size() + ci.psi_pairs.size() + ci.xi_pairs.size() == ci.gamma.size(),
             [&] { return at_j(j); });
      for (u64 k : ci.a_set)
        expect(c, odd_of_index(k) % 3 != 0, [&] { return at_j(j) + " k=" + std::to_string(k); });
      for (u64 k : ci.b_set)
        expect(c, odd_of_index(k) % 3 != 0 && !t.is_prime(odd_of_index(k)),
               [&] { return at_j(j) + " k=" + std::to_string(k); });
      for (const IndexPair& g : ci.gamma)
        expect(c, g.second == g.first + 1 && g.first % 3 == 1,
               [&] { return at_j(j) + " k=" + std::to_string(g.first); });
    }
  }
  {
    Check& c = s.begin("twin_pairs_match_direct_sieve");
    for (u64 j = 0; j <= std::min<u64>(J, 30); ++j) {
      const ClassifiedInterval ci = classify_interval(t, j);
      std::vector<u64> twins;  // lower member of each twin pair past (3,5)
      for (u64 p = 5; p + 2 <= ci.interval.n_max; p += 2)
        if (t.is_prime(p) && t.is_prime(p + 2)) twins.push_back(p);
      expect(c, twins.size() == ci.pi_pairs.size(), [&] { return at_j(j); });
      for (std::size_t i = 0; i < std::min(twins.size(), ci.pi_pairs.size()); ++i)
        expect(c,
               odd_of_index(ci.pi_pairs[i].first) == twins[i] &&
                   odd_of_index(ci.pi_pairs[i].second) == twins[i] + 2,
               [&] { return at_j(j) + " pair#" + std::to_string(i); });
    }
  }
  {
    Check& c = s.begin("restricted_psi_monotone");
    for (u64 j = 0; j <= J200; ++j) {
      u64 prev = 0;
      for (u64 n = 1; n <= 9; ++n) {
        const RestrictedCounts rc = oracle_restricted(t, j, n);
        expect(c, rc.psi_n >= prev, [&] { return at_jn(j, n); });
        expect(c, rc.psi_n <= oc[j].psi, [&] { return at_jn(j, n); });
        prev = rc.psi_n;
      }
    }
  }
  {
    Check& c = s.begin("a_gamma_closed_forms");
    for (u64 j = 0; j <= J; ++j) {
      expect(c, a_count(j) == oc[j].a, [&] { return at_j(j); });
      expect(c, gamma_count(j) == oc[j].gamma, [&] { return at_j(j); });
      expect(c, a_count(j) == 2 * gamma_count(j), [&] { return at_j(j); });
    }
  }
  {
    Check& c = s.begin("b_closed_form");
    for (u64 j = 0; j <= J; ++j)
      expect(c, b_count_exact(t, j) == oc[j].b, [&] { return at_j(j); });
  }
  {
    Check& c = s.begin("b_ie_repaired_full");
    for (u64 j = 0; j <= J200; ++j)
      expect(c,
             b_count_inclusion_exclusion(t, j, pc[j].pi_dprime, BFormulaMode::Repaired) ==
                 static_cast<i64>(oc[j].b),
             [&] { return at_j(j); });
  }
  {
    Check& c = s.begin("b_ie_repaired_partial");
    for (u64 j = 0; j <= J100; ++j)
      for (u64 n = 1; n <= 8; ++n)
        expect(c,
               b_count_inclusion_exclusion(t, j, n, BFormulaMode::Repaired) ==
                   static_cast<i64>(oracle_restricted(t, j, n).b_n),
               [&] { return at_jn(j, n); });
  }
  {
    Check& c = s.begin("pi_identity");
    for (u64 j = 0; j <= J; ++j)
      expect(c, pi_count_via_identity(t, j, PsiSource::Oracle) == static_cast<i64>(oc[j].pi),
             [&] { return at_j(j); });
  }
  {
    // 3 gamma / (2 j^2) in (1, 1 + 6/j], checked in exact integers.
    Check& c = s.begin("gamma_growth_ratio");
    for (u64 j = 10; j <= J; ++j) {
      const u64 g3 = 3 * gamma_count(j);
      expect(c, 2 * j * j < g3 && g3 <= 2 * j * j + 12 * j, [&] { return at_j(j); });
    }
  }
  {
    // The literal transcriptions overcount where the scan says 1 and 3;
    // their exact values are pinned so any drift is caught.
    Check& c = s.begin("printed_forms_pinned_discrepancy");
    expect(c, b_count_inclusion_exclusion(t, 0, 2, BFormulaMode::AsPrinted) == 3,
           [] { return std::string("literal subset sum at j=0"); });
    expect(c, b_count_mobius_printed(t, 0) == 3, [] { return std::string("mobius form j=0"); });
    expect(c, b_count_mobius_printed(t, 1) == 8, [] { return std::string("mobius form j=1"); });
    expect(c, interval_counts(t, 0).b == 1, [] { return std::string("scan b j=0"); });
    expect(c, interval_counts(t, 1).b == 3, [] { return std::string("scan b j=1"); });
  }
  {
    Check& c = s.begin("report_fields_consistent");
    for (u64 j = 0; j <= std::min<u64>(J, 25); ++j) {
      const CountReport r = build_count_report(t, j);
      expect(c, r.pi_oracle + r.b_oracle == r.gamma + r.psi_oracle, [&] { return at_j(j); });
      expect(c,
             r.a == a_count(j) && r.gamma == gamma_count(j) && r.b_exact == b_count_exact(t, j),
             [&] { return at_j(j); });
      expect(c, r.b_ie_repaired == static_cast<i64>(r.b_oracle), [&] { return at_j(j); });
      expect(c, r.pi_via_identity == static_cast<i64>(r.pi_oracle), [&] { return at_j(j); });
      expect(c, !r.psi_ie || *r.psi_ie == static_cast<i64>(r.psi_oracle),
             [&] { return at_j(j); });
      expect(c, r.k_max == counting_interval(j).k_max, [&] { return at_j(j); });
    }
  }
}

// ------------------------------------------------------------------- crt --

struct PairCase {
  std::vector<u64> k1, k2;
  CrtSolution fwd, rev;
};

std::string pair_str(const PairCase& p) {
  std::string s = "k1={";
  for (u64 i : p.k1) s += std::to_string(i) + ",";
  s += "} k2={";
  for (u64 i : p.k2) s += std::to_string(i) + ",";
  s += "}";
  return s;
}

void suite_crt(Suite& s, const PrimeTable& t, u64 max_j) {
  const u64 J20 = std::min<u64>(max_j, 20);
  const u64 J100 = std::min<u64>(max_j, 100);

  // Every disjoint non-empty ordered pair over indices {1..4} (50 of them),
  // then random ones over indices {1..10} with a fixed seed, 250 total.
  std::vector<PairCase> pool;
  for (u32 code = 0; code < 81; ++code) {
    u32 rest = code;
    PairCase pcs;
    for (u64 i = 1; i <= 4; ++i, rest /= 3) {
      if (rest % 3 == 1) pcs.k1.push_back(i);
      if (rest % 3 == 2) pcs.k2.push_back(i);
    }
    if (!pcs.k1.empty() && !pcs.k2.empty()) pool.push_back(std::move(pcs));
  }
  std::mt19937_64 rng(0x1db3c0deuLL);
  while (pool.size() < 250) {
    PairCase pcs;
    for (u64 i = 1; i <= 10; ++i) {
      switch (rng() % 3) {
        case 1: pcs.k1.push_back(i); break;
        case 2: pcs.k2.push_back(i); break;
        default: break;
      }
    }
    if (!pcs.k1.empty() && !pcs.k2.empty()) pool.push_back(std::move(pcs));
  }
  for (PairCase& pcs : pool) {
    const PrimeIndexSet s1(pcs.k1, t), s2(pcs.k2, t);
    pcs.fwd = solve_y0(t, s1, s2);
    pcs.rev = solve_y0(t, s2, s1);
  }

  {
    Check& c = s.begin("y0_equals_scan_oracle");
    for (const PairCase& p : pool) {
      const auto got = oracle_y0(t, p.k1, p.k2, static_cast<u64>(p.fwd.modulus));
      expect(c, got.has_value() && u128(*got) == p.fwd.y0, [&] { return pair_str(p); });
    }
  }
  {
    Check& c = s.begin("y0_congruences");
    for (const PairCase& p : pool) {
      const CrtSolution& f = p.fwd;
      expect(c, f.y0 % 2 == 1 && f.y0 % 3 == 2 && f.y0 >= 1 && f.y0 < f.modulus,
             [&] { return pair_str(p); });
      expect(c, f.y0 % f.p1 == 0 && (f.y0 + 2) % f.p2 == 0, [&] { return pair_str(p); });
      expect(c, f.modulus == 6 * f.p1 * f.p2, [&] { return pair_str(p); });
    }
  }
  {
    Check& c = s.begin("mirror_identity");
    for (const PairCase& p : pool)
      expect(c, p.rev.y0 == mirror_y0(p.fwd), [&] { return pair_str(p); });
  }
  {
    Check& c = s.begin("mirror_involution");
    for (const PairCase& p : pool)
      expect(c, p.fwd.modulus - mirror_y0(p.fwd) - 2 == p.fwd.y0, [&] { return pair_str(p); });
  }
  {
    Check& c = s.begin("never_both_first_pair_excluded");
    for (const PairCase& p : pool)
      expect(c,
             !(p.fwd.case_tag == CrtCase::FirstPairExcluded &&
               p.rev.case_tag == CrtCase::FirstPairExcluded),
             [&] { return pair_str(p); });
  }
  {
    Check& c = s.begin("first_pair_excluded_structure");
    for (const PairCase& p : pool) {
      const CrtSolution& f = p.fwd;
      const u128 base = (f.y0 - 3) / 2;
      const bool excluded = f.case_tag == CrtCase::FirstPairExcluded;
      expect(c, f.x0 == (excluded ? base + f.modulus / 2 : base), [&] { return pair_str(p); });
      if (excluded)
        expect(c,
               (p.k1.size() == 1 && f.y0 == f.p1) || (p.k2.size() == 1 && f.y0 + 2 == f.p2),
               [&] { return pair_str(p); });
    }
  }
  {
    Check& c = s.begin("psi_ie_full_matches_scan");
    for (u64 j = 0; j <= J20; ++j)
      expect(c,
             psi_count_ie(t, j, pi_counts(t, j).pi_dprime, 16) ==
                 static_cast<i64>(interval_counts(t, j).psi),
             [&] { return at_j(j); });
  }
  {
    std::vector<std::array<i64, 8>> grid(J100 + 1);
    for (u64 j = 0; j <= J100; ++j)
      for (u64 n = 1; n <= 7; ++n) grid[j][n] = psi_count_ie(t, j, n);
    {
      Check& c = s.begin("psi_ie_partial_matches_scan");
      for (u64 j = 0; j <= J100; ++j)
        for (u64 n = 1; n <= 6; ++n)
          expect(c, grid[j][n] == static_cast<i64>(oracle_restricted(t, j, n).psi_n),
                 [&] { return at_jn(j, n); });
    }
    {
      Check& c = s.begin("psi_ie_monotone_bounded");
      for (u64 j = 0; j <= J100; ++j) {
        const i64 full = static_cast<i64>(interval_counts(t, j).psi);
        for (u64 n = 1; n <= 7; ++n) {
          if (n > 1)
            expect(c, grid[j][n] >= grid[j][n - 1], [&] { return at_jn(j, n); });
          if (j > 0)
            expect(c, grid[j][n] >= grid[j - 1][n], [&] { return at_jn(j, n); });
          expect(c, grid[j][n] <= full, [&] { return at_jn(j, n); });
        }
      }
    }
    {
      Check& c = s.begin("e1_vanishes");
      for (u64 j = 0; j <= J100; ++j)
        expect(c, grid[j][1] == 0, [&] { return at_j(j); });
    }
  }
  {
    Check& c = s.begin("grouping_sign_identity");
    for (u64 n = 2; n <= 4; ++n)
      for (u64 s1 = 1; s1 < n; ++s1)
        for (u64 s2 = 1; s1 + s2 <= n; ++s2)
          expect(c, grouping_sign_check(s1, s2, n) == (((s1 + s2) % 2 == 0) ? 1 : -1), [&] {
            return "s1=" + std::to_string(s1) + " s2=" + std::to_string(s2) +
                   " n=" + std::to_string(n);
          });
  }
}

// ---------------------------------------------------------------- series --

void suite_series(Suite& s, const PrimeTable& t) {
  {
    Check& c = s.begin("divisor_sum_identities");
    for (i64 a : {-1, 0, 1, 2, 3})
      for (u64 n = 1; n <= 100'000; ++n) {
        const DivisorSumIdentity id = divisor_sum_check(t, a, n);
        expect(c, id.lhs_plain == id.rhs_plain && id.lhs_weighted == id.rhs_weighted,
               [&] { return "A=" + std::to_string(a) + " n=" + std::to_string(n); });
      }
  }
  {
    Check& c = s.begin("floor_sum_identity");
    constexpr u64 kTop = 10'000;
    for (i64 a : {1, 2}) {
      std::vector<i64> mu_vals(kTop + 1, 0);
      std::vector<i64> rhs(kTop + 1, 0);
      for (u64 k = 1; k <= kTop; ++k) {
        mu_vals[k] = mu_a(t, a, k);
        i64 p = 1;
        for (u64 e = omega(t, k); e > 0; --e) p *= (1 - a);
        rhs[k] = rhs[k - 1] + p;
      }
      for (u64 n = 1; n <= kTop; ++n) {
        i64 lhs = 0;
        for (u64 k = 1; k <= n; ++k) lhs += mu_vals[k] * static_cast<i64>(n / k);
        expect(c, lhs == rhs[n], [&] { return "A=" + std::to_string(a) + " n=" + std::to_string(n); });
      }
      for (u64 n : {u64(1), u64(7), u64(128), u64(9999), kTop}) {
        const FloorSumIdentity f = floor_sum_check(t, a, n);
        expect(c, f.lhs == f.rhs && f.rhs == rhs[n],
               [&] { return "op A=" + std::to_string(a) + " n=" + std::to_string(n); });
      }
    }
  }
  {
    Check& c = s.begin("s_series_bounded");
    const std::vector<SeriesPoint> pts = s_series(t, 1'000'000);
    u64 prev_n = 0;
    for (const SeriesPoint& p : pts) {
      expect(c, std::fabs(p.value) <= 2.0, [&] { return "n=" + std::to_string(p.n); });
      expect(c, p.n == prev_n + 1, [&] { return "n=" + std::to_string(p.n); });
      prev_n = p.n;
    }
  }
  {
    Check& c = s.begin("nu_matches_mu2_minus_2mu");
    for (u64 n = 1; n <= 1'000'000; ++n)
      if (n % 2 != 0 && n % 3 != 0)
        expect(c, nu(t, n) == mu_a(t, 2, n) - 2 * static_cast<i64>(mobius(t, n)),
               [&] { return "n=" + std::to_string(n); });
  }
  {
    Check& c = s.begin("e_direct_equals_product");
    for (u64 n = 1; n <= 12; ++n)
      expect(c, e_direct(t, n) == e_product_exact(t, n), [&] { return "N=" + std::to_string(n); });
  }
  {
    Check& c = s.begin("e_product_monotone_below_one");
    const std::vector<double> pre = e_product_prefix(t, 100'000);
    expect(c, pre.size() == 100'000, [] { return std::string("prefix size"); });
    expect(c, !pre.empty() && pre[0] == 0.0, [] { return std::string("E_1"); });
    for (std::size_t i = 0; i < pre.size(); ++i) {
      expect(c, pre[i] < 1.0, [&] { return "N=" + std::to_string(i + 1); });
      if (i > 0) expect(c, pre[i] > pre[i - 1], [&] { return "N=" + std::to_string(i + 1); });
    }
    for (u64 n : {u64(1), u64(5), u64(12), u64(40), u64(64)}) {
      const double exact = e_product_exact(t, n).convert_to<double>();
      expect(c, std::fabs(exact - pre[n - 1]) <= 1e-12, [&] { return "N=" + std::to_string(n); });
      expect(c, std::fabs(e_product_fp(t, n) - pre[n - 1]) <= 1e-12,
             [&] { return "N=" + std::to_string(n); });
    }
  }
  {
    // The same series through two function paths: nu directly, and
    // mu_2 - 2 mu on the coprime-to-6 values, summed by the identical
    // compensated recurrence.  Terms are equal integers over equal
    // denominators, so the partial sums must agree bit for bit.
    Check& c = s.begin("m_series_two_paths");
    constexpr u64 kTop = 20'000;
    const std::vector<SeriesPoint> pts = m_series(t, kTop);
    expect(c, pts.size() == kTop, [] { return std::string("point count"); });
    double sum = 0.0, comp = 0.0;
    u64 prev_n = 0;
    double best = 0.0;
    u64 best_n = 0;
    for (const SeriesPoint& p : pts) {
      expect(c, p.n == prev_n + 1, [&] { return "n=" + std::to_string(p.n); });
      prev_n = p.n;
      const u64 v = 2 * p.n + 1;
      const i64 w = (v % 3 != 0) ? mu_a(t, 2, v) - 2 * static_cast<i64>(mobius(t, v)) : 0;
      expect(c, nu(t, v) == w, [&] { return "n=" + std::to_string(p.n); });
      if (w != 0) {
        const double y = static_cast<double>(w) / static_cast<double>(v) - comp;
        const double tt = sum + y;
        comp = (tt - sum) - y;
        sum = tt;
      }
      expect(c, sum == p.value, [&] { return "n=" + std::to_string(p.n); });
      if (std::fabs(sum) > std::fabs(best)) {
        best = sum;
        best_n = p.n;
      }
    }
    // Regression snapshot of the empirical extremum (no closed form exists).
    expect(c, std::fabs(best - 1.0075069075865273) <= 1e-9,
           [&] { return "max=" + std::to_string(best); });
    expect(c, best_n == 15993, [&] { return "argmax=" + std::to_string(best_n); });
  }
}

// ----------------------------------------------------------------- wheel --

void suite_wheel(Suite& s, const PrimeTable& t, u64 max_j) {
  const std::vector<u64> pinned210 = {11,  17,  29,  41,  59,  71,  101, 107,
                                      137, 149, 167, 179, 191, 197, 209};
  {
    Check& c = s.begin("wheel_210_residues");
    const ResidueWheel w = build_wheel({3, 5, 7});
    expect(c, w.modulus == 210, [] { return std::string("modulus"); });
    expect(c, w.residues == pinned210, [] { return std::string("residue list"); });
    const std::vector<u64> pinned_idx = {4,  7,  13, 19, 28, 34, 49, 52,
                                         67, 73, 82, 88, 94, 97, 103};
    expect(c, index_residues(w) == pinned_idx, [] { return std::string("index residues"); });
  }

  std::vector<std::vector<u64>> families;
  std::vector<ResidueWheel> wheels;
  const u64 extra[4] = {5, 7, 11, 13};
  for (u32 mask = 0; mask < 16; ++mask) {
    std::vector<u64> f{3};
    for (u32 b = 0; b < 4; ++b)
      if (mask >> b & 1) f.push_back(extra[b]);
    families.push_back(f);
    wheels.push_back(build_wheel(std::move(f)));
  }
  const auto fam_str = [&](std::size_t i) {
    std::string s2 = "family#" + std::to_string(i) + " m=" + std::to_string(wheels[i].modulus);
    return s2;
  };

  {
    Check& c = s.begin("wheel_symmetry_and_parity");
    for (std::size_t i = 0; i < wheels.size(); ++i) {
      const ResidueWheel& w = wheels[i];
      expect(c, std::binary_search(w.residues.begin(), w.residues.end(), w.modulus - 1),
             [&] { return fam_str(i) + " missing m-1"; });
      expect(c, w.residues.size() % 2 == 1, [&] { return fam_str(i) + " even count"; });
      u64 fixed = 0;
      for (u64 r : w.residues) {
        const u64 mirrored = (2 * w.modulus - r - 2) % w.modulus;
        expect(c, std::binary_search(w.residues.begin(), w.residues.end(), mirrored),
               [&] { return fam_str(i) + " r=" + std::to_string(r); });
        if (mirrored == r) ++fixed;
      }
      expect(c, fixed == 1, [&] { return fam_str(i) + " fixed points"; });
      expect(c, (2 * w.modulus - (w.modulus - 1) - 2) % w.modulus == w.modulus - 1,
             [&] { return fam_str(i); });
    }
  }
  {
    Check& c = s.begin("wheel_count_product_rule");
    for (std::size_t i = 0; i < wheels.size(); ++i) {
      u64 want = 1;
      for (u64 q : families[i]) want *= q - 2;
      expect(c, wheels[i].residues.size() == want, [&] { return fam_str(i); });
    }
  }
  {
    Check& c = s.begin("index_residue_roundtrip");
    for (std::size_t i = 0; i < wheels.size(); ++i) {
      const ResidueWheel& w = wheels[i];
      const std::vector<u64> idx = index_residues(w);
      expect(c, idx.size() == w.residues.size(), [&] { return fam_str(i); });
      for (std::size_t k = 0; k < idx.size() && k < w.residues.size(); ++k)
        expect(c, 2 * idx[k] + 3 == w.residues[k],
               [&] { return fam_str(i) + " rho=" + std::to_string(idx[k]); });
    }
  }
  {
    Check& c = s.begin("composite_witness_in_class");
    for (const ResidueWheel& w : wheels)
      for (u64 r : w.residues) {
        const u64 wit = composite_witness(r, w.modulus);
        expect(c, wit % w.modulus == r,
               [&] { return "m=" + std::to_string(w.modulus) + " r=" + std::to_string(r); });
        // Compositeness by explicit factor: (m+1) divides, cofactor > 1.
        expect(c, wit % (w.modulus + 1) == 0 && wit / (w.modulus + 1) > 1,
               [&] { return "m=" + std::to_string(w.modulus) + " r=" + std::to_string(r); });
      }
  }
  {
    Check& c = s.begin("twin_pairs_on_wheel_residues");
    std::array<bool, 210> on{};
    for (u64 r : pinned210) on[r] = true;
    u64 pairs = 0;
    for (u64 p = 11; p + 2 <= 1'000'000; p += 2)
      if (t.is_prime(p) && t.is_prime(p + 2)) {
        ++pairs;
        expect(c, on[p % 210], [&] { return "p=" + std::to_string(p); });
      }
    expect(c, pairs > 5000, [&] { return "pairs=" + std::to_string(pairs); });
  }
  {
    Check& c = s.begin("pi2_matches_prediction");
    for (u64 n = 0; n <= 1000; ++n) {
      const Pi2Prediction pr = pi2_prediction(n);
      expect(c,
             pr.gamma == 35 * n + 1 && pr.b2 == 22 * n && pr.psi2 == 2 * n &&
                 pr.pi2 == 15 * n + 1,
             [&] { return "n=" + std::to_string(n); });
      expect(c, pr.pi2 + pr.b2 == pr.gamma + pr.psi2, [&] { return "n=" + std::to_string(n); });
    }
    for (u64 j = 0; j <= std::min<u64>(max_j, 200); ++j) {
      const CountingInterval iv = counting_interval(j);
      if (iv.k_max % 105 != 3) continue;
      const Pi2Prediction pr = pi2_prediction((iv.k_max - 3) / 105);
      expect(c, pi2_oracle(t, j) == pr.pi2, [&] { return at_j(j); });
      expect(c, gamma_count(j) == pr.gamma, [&] { return at_j(j); });
      expect(c, oracle_restricted(t, j, 2).b_n == pr.b2, [&] { return at_j(j); });
      expect(c, psi_count_ie(t, j, 2) == static_cast<i64>(pr.psi2), [&] { return at_j(j); });
    }
  }
}

}  // namespace

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  // One table serves every suite: the series identities need factorizations
  // to 1e6 and the 100 001st odd prime (~1.3e6); the count sweeps need the
  // interval ceiling for the capped j.
  const u64 cap_j = std::min<u64>(opt.max_j, 500);
  const u64 limit = std::max<u64>(1'500'017, counting_interval(cap_j).n_max + 2);
  const PrimeTable table(limit);

  std::vector<Suite> suites;
  const bool all = opt.suite == "all";
  if (all || opt.suite == "counts") {
    Suite& s = suites.emplace_back();
    s.name = "counts";
    suite_counts(s, table, opt.max_j);
  }
  if (all || opt.suite == "crt") {
    Suite& s = suites.emplace_back();
    s.name = "crt";
    suite_crt(s, table, opt.max_j);
  }
  if (all || opt.suite == "series") {
    Suite& s = suites.emplace_back();
    s.name = "series";
    suite_series(s, table);
  }
  if (all || opt.suite == "wheel") {
    Suite& s = suites.emplace_back();
    s.name = "wheel";
    suite_wheel(s, table, opt.max_j);
  }

  ordered_json summary;
  summary["max_j"] = opt.max_j;
  ordered_json jsuites;
  bool all_ok = true;
  u64 total = 0;
  for (const Suite& su : suites) {
    bool suite_ok = true;
    u64 suite_asserts = 0;
    ordered_json checks = ordered_json::array();
    std::string first_failure;
    for (const Check& ch : su.checks) {
      suite_asserts += ch.asserts;
      if (ch.ok) {
        checks.push_back(ch.name + ": pass");
      } else {
        checks.push_back(ch.name + ": fail (" + ch.detail + ")");
        if (first_failure.empty()) first_failure = ch.name + ": " + ch.detail;
        suite_ok = false;
      }
    }
    ordered_json js;
    js["ok"] = suite_ok;
    js["assertions"] = suite_asserts;
    js["checks"] = checks;
    js["first_failure"] = first_failure.empty() ? ordered_json(nullptr) : ordered_json(first_failure);
    jsuites[su.name] = js;
    all_ok = all_ok && suite_ok;
    total += suite_asserts;
  }
  summary["suites"] = jsuites;
  summary["total_assertions"] = total;
  summary["ok"] = all_ok;
  out << summary.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace twinsieve::cli
