#pragma once

#include "twinsieve/prime_table.hpp"

namespace twinsieve {

// How the literal inclusion-exclusion sum for |B| handles each subset term
// floor((M - P_K) / (2 P_K)), M = (2j+5)^2.
//
// AsPrinted evaluates the floor exactly as written, negative values and all.
// That transcription demonstrably undercorrects: at j = 0 it gives 3 where
// the set being counted has 1 element.  Repaired counts what the term is
// evidently meant to count — odd multiples m*P_K <= M with m >= 3 for
// singletons (the value P_K itself is prime) and m >= 1 for |K| >= 2 (P_K
// is already composite) — and reproduces the brute-force count everywhere
// it was checked.  Both modes are kept deliberately.
enum class BFormulaMode { AsPrinted, Repaired };

// Where pi_count_via_identity takes its both-composite pair count from.
enum class PsiSource { Oracle, Formula };

u64 a_count(u64 j);      // |A(j)| = floor(2 (k_max+1) / 3)
u64 gamma_count(u64 j);  // |Gamma(j)| = floor((k_max+1) / 3)

// |B(j)| = |A(j)| - pi((2j+5)^2) + 2: the composite members of A are all of
// A except the primes 5..(2j+5)^2, every one of which sits in A.
u64 b_count_exact(const PrimeTable& table, u64 j);

// Signed subset sum over K in [0, n_primes], K != {}, K != {0}, of
// (-1)^(|K|-1) * T_K.  In AsPrinted mode the full 2^(N+1) - 2 subsets are
// enumerated (guarded by term_guard); Repaired mode prunes subsets whose
// smallest admissible multiple already exceeds M.
i64 b_count_inclusion_exclusion(const PrimeTable& table, u64 j, u64 n_primes, BFormulaMode mode,
                                u64 term_guard = u64(1) << 24);

// Literal evaluation of the second printed form,
// -sum_{k=1}^{k_max} mu(2k+3) * floor((k_max - k) / (2k+3)).
// Kept as printed (it also disagrees with the brute-force count at small j).
i64 b_count_mobius_printed(const PrimeTable& table, u64 j);

// |Pi(j)| = |Gamma(j)| - |B(j)| + |Psi(j)| with |Psi| from the brute-force
// scan or from the pair inclusion-exclusion formula (guarded).
i64 pi_count_via_identity(const PrimeTable& table, u64 j, PsiSource source, u64 psi_guard = 16);

}  // namespace twinsieve
