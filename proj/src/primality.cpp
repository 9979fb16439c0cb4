#include "twinsieve/primality.hpp"

#include <initializer_list>

namespace twinsieve {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// One Miller-Rabin round; n odd >= 3, n - 1 = d * 2^s.
bool mr_round_u64(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool mr_u64(u64 n, std::initializer_list<u64> bases) {
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (u64 a : bases)
    if (!mr_round_u64(n, a, d, s)) return false;
  return true;
}

// 128-bit modular arithmetic for the extended range.  Moduli stay below
// 2^82, so addmod never wraps u128 and schoolbook double-and-add works.
u128 mulmod_u128(u128 a, u128 b, u128 m) {
  a %= m;
  b %= m;
  u128 r = 0;
  while (b > 0) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    a += a;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return r;
}

u128 powmod_u128(u128 a, u128 e, u128 m) {
  u128 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u128(r, a, m);
    a = mulmod_u128(a, a, m);
    e >>= 1;
  }
  return r;
}

bool mr_round_u128(u128 n, u128 a, u128 d, int s) {
  a %= n;
  if (a == 0) return true;
  u128 x = powmod_u128(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u128(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

u128 primality_certainty_bound() {
  // 3,317,044,064,679,887,385,961,981: the first 12 primes are a proven
  // deterministic Miller-Rabin base set strictly below this value.
  return u128(331704406467) * 10000000000000ull + 9887385961981ull;
}

bool is_prime_det(u64 n) {
  if (n < 2) return false;
  for (u64 p : {u64(2), u64(3), u64(5), u64(7)}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Tiered proven base sets keep the common small inputs cheap.
  if (n < 2047) return mr_u64(n, {2});
  if (n < 1373653) return mr_u64(n, {2, 3});
  if (n < 25326001) return mr_u64(n, {2, 3, 5});
  if (n < 3215031751ull) return mr_u64(n, {2, 3, 5, 7});
  if (n < 3474749660383ull) return mr_u64(n, {2, 3, 5, 7, 11, 13});
  if (n < 341550071728321ull) return mr_u64(n, {2, 3, 5, 7, 11, 13, 17});
  if (n < 3825123056546413051ull) return mr_u64(n, {2, 3, 5, 7, 11, 13, 17, 19, 23});
  return mr_u64(n, {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
}

bool is_prime_det(u128 n) {
  if (n <= ~u64(0)) return is_prime_det(static_cast<u64>(n));
  if (n >= primality_certainty_bound())
    throw resource_error("is_prime_det: input exceeds the deterministic base-set bound " +
                         to_string(primality_certainty_bound()));
  for (u64 p : {u64(2), u64(3), u64(5), u64(7), u64(11), u64(13)})
    if (n % p == 0) return false;  // n > 2^64, so equality is impossible
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (!mr_round_u128(n, a, d, s)) return false;
  return true;
}

}  // namespace twinsieve
