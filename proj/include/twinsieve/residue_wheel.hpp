#pragma once

#include <vector>

#include "twinsieve/prime_table.hpp"

namespace twinsieve {

// Residues r mod m = 2 * (product of an odd-prime family, 3 included) with
// gcd(r, m) = gcd(r + 2, m) = 1: the positions where both members of a
// candidate pair (r, r+2) survive the wheel.
struct ResidueWheel {
  std::vector<u64> prime_family;  // sorted, distinct odd primes, contains 3
  u64 modulus = 0;                // 2 * product(family)
  std::vector<u64> residues;      // ascending, in [0, modulus)
};

// Validates the family (distinct odd primes, 3 present) and collects the
// surviving residues by a plain gcd scan over [0, modulus).
ResidueWheel build_wheel(std::vector<u64> prime_family);

// The wheel transported to index space: rho = (r - 3) / 2 mod (modulus / 2)
// for each residue r (every r is odd and >= 3 ... wrapping via + modulus
// keeps the arithmetic in range for r = 1).
std::vector<u64> index_residues(const ResidueWheel& wheel);

// A composite witness n = r (mod m) proving the residue class r contains
// composites: (m+1)^2 * r, or (m+1)^2 when r = 1.  Overflow-checked.
u64 composite_witness(u64 r, u64 m);

// Term-by-term counts over [0, 105n + 3] predicted by the {3,5,7} wheel.
struct Pi2Prediction {
  u64 gamma;  // 35n + 1
  u64 b2;     // 22n
  u64 psi2;   // 2n
  u64 pi2;    // 15n + 1
};
Pi2Prediction pi2_prediction(u64 n);

// Candidate pairs surviving the {3,5,7} wheel: consecutive index pairs
// (k, k+1) with k = 1 (mod 3) inside [0, k_max(j)] whose values are both
// coprime to 35, plus 1 for the isolated pair (5,7) that the wheel itself
// removes.  Equals 15n + 1 whenever k_max = 105n + 3.
u64 pi2_oracle(const PrimeTable& table, u64 j);

}  // namespace twinsieve
