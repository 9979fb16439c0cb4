#include "twinsieve/residue_wheel.hpp"

#include <algorithm>
#include <numeric>

#include "twinsieve/index_core.hpp"

namespace twinsieve {

ResidueWheel build_wheel(std::vector<u64> prime_family) {
  if (prime_family.empty()) throw std::domain_error("build_wheel: empty prime family");
  std::sort(prime_family.begin(), prime_family.end());
  if (std::adjacent_find(prime_family.begin(), prime_family.end()) != prime_family.end())
    throw std::domain_error("build_wheel: duplicate prime in family");

  u64 m = 2;
  bool has3 = false;
  for (u64 p : prime_family) {
    if (p % 2 == 0) throw std::domain_error("build_wheel: family primes must be odd");
    if (p < 3) throw std::domain_error("build_wheel: family members must be odd primes");
    // Trial division suffices here; family members are small by design.
    for (u64 d = 3; d * d <= p; d += 2)
      if (p % d == 0) throw std::domain_error("build_wheel: " + std::to_string(p) + " is not prime");
    if (p == 3) has3 = true;
    m = checked_mul(m, p);
  }
  if (!has3) throw std::domain_error("build_wheel: family must contain 3 (the pair setting needs it)");

  ResidueWheel w;
  w.prime_family = std::move(prime_family);
  w.modulus = m;
  for (u64 r = 0; r < m; ++r)
    if (std::gcd(r, m) == 1 && std::gcd(r + 2, m) == 1) w.residues.push_back(r);
  return w;
}

std::vector<u64> index_residues(const ResidueWheel& wheel) {
  std::vector<u64> out;
  out.reserve(wheel.residues.size());
  const u64 half = wheel.modulus / 2;
  for (u64 r : wheel.residues)
    out.push_back(((r + wheel.modulus - 3) / 2) % half);  // (r-3)/2 mod m/2, wrap-safe
  return out;
}

u64 composite_witness(u64 r, u64 m) {
  if (r == 0) throw std::domain_error("composite_witness: r = 0 has no coprime representative");
  if (r >= m) throw std::domain_error("composite_witness: need 1 <= r < m");
  const u64 sq = checked_mul(checked_add(m, 1), checked_add(m, 1));
  return r == 1 ? sq : checked_mul(sq, r);
}

Pi2Prediction pi2_prediction(u64 n) {
  Pi2Prediction p;
  p.gamma = checked_add(checked_mul(35, n), 1);
  p.b2 = checked_mul(22, n);
  p.psi2 = checked_mul(2, n);
  p.pi2 = checked_add(checked_mul(15, n), 1);
  return p;
}

u64 pi2_oracle(const PrimeTable& table, u64 j) {
  const CountingInterval iv = counting_interval(j);
  if (iv.n_max > table.limit())
    throw resource_error("pi2_oracle: prime table covers only " + std::to_string(table.limit()) +
                         ", need " + std::to_string(iv.n_max));
  u64 count = 1;  // the isolated pair (5,7), removed by the wheel itself
  for (u64 k1 = 1; k1 + 1 <= iv.k_max; k1 += 3) {
    const u64 v1 = odd_of_index(k1);
    const u64 v2 = v1 + 2;
    if (std::gcd(v1, u64(35)) == 1 && std::gcd(v2, u64(35)) == 1) ++count;
  }
  return count;
}

}  // namespace twinsieve
