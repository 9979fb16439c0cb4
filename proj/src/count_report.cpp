#include "twinsieve/count_report.hpp"

#include "twinsieve/count_forms.hpp"
#include "twinsieve/crt_psi.hpp"
#include "twinsieve/index_core.hpp"
#include "twinsieve/prime_oracle.hpp"

namespace twinsieve {

CountReport build_count_report(const PrimeTable& table, u64 j, const ReportOptions& opt) {
  const CountingInterval iv = counting_interval(j);
  const IntervalCounts oracle = interval_counts(table, j);
  const u64 n_full = pi_counts(table, j).pi_dprime;

  CountReport r;
  r.j = j;
  r.k_max = iv.k_max;
  r.a = oracle.a;
  r.gamma = oracle.gamma;
  r.b_oracle = oracle.b;
  r.psi_oracle = oracle.psi;
  r.pi_oracle = oracle.pi;
  r.xi_oracle = oracle.xi;

  r.b_exact = b_count_exact(table, j);
  r.b_ie_repaired = b_count_inclusion_exclusion(table, j, n_full, BFormulaMode::Repaired);
  try {
    r.b_ie_printed =
        b_count_inclusion_exclusion(table, j, n_full, BFormulaMode::AsPrinted, opt.printed_term_guard);
  } catch (const resource_error&) {
    // 2^(N+1) subsets past the guard: leave the literal-mode field empty.
  }
  try {
    r.b_mobius_printed = b_count_mobius_printed(table, j);
  } catch (const resource_error&) {
    // needs mu up to (2j+5)^2, past the dense factor table: leave empty.
  }
  if (n_full <= opt.psi_guard) r.psi_ie = psi_count_ie(table, j, n_full, opt.psi_guard);
  r.pi_via_identity = pi_count_via_identity(table, j, PsiSource::Oracle);
  return r;
}

}  // namespace twinsieve
