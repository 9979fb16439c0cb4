#pragma once

#include <optional>

#include "twinsieve/prime_table.hpp"

namespace twinsieve {

// One row of the counts command: brute-force scan values next to every
// formula path that can reproduce them.  Formula fields that would need an
// enumeration past their guard (or factor-table coverage past its cap) are
// left empty rather than estimated.
struct CountReport {
  u64 j = 0;
  u64 k_max = 0;
  u64 a = 0;
  u64 gamma = 0;
  u64 b_oracle = 0;
  u64 b_exact = 0;
  i64 b_ie_repaired = 0;
  std::optional<i64> b_ie_printed;
  std::optional<i64> b_mobius_printed;
  u64 psi_oracle = 0;
  std::optional<i64> psi_ie;
  u64 pi_oracle = 0;
  i64 pi_via_identity = 0;
  u64 xi_oracle = 0;
};

struct ReportOptions {
  u64 psi_guard = 12;                      // 3^N cap for the pair formula
  u64 printed_term_guard = u64(1) << 24;   // subset cap for the literal B sum
};

CountReport build_count_report(const PrimeTable& table, u64 j, const ReportOptions& opt = {});

}  // namespace twinsieve
