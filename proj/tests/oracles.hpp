#pragma once

// Brute-force reference implementations for the test suites. Everything
// here works on plain uint64_t with unsigned __int128 intermediates and is
// deliberately independent of the library under test: no sfa:: calls.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

// exp literal multiplications; no squaring shortcut.
inline u64 powmod_naive(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  for (u64 i = 0; i < exp; ++i) r = mulmod(r, base, m);
  return r;
}

inline u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u64 isqrt(u64 x) {
  if (x == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && static_cast<u128>(r) * r > x) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline bool is_square(u64 x) {
  const u64 r = isqrt(x);
  return r * r == x;
}

inline u64 order_by_chain(u64 c, u64 n) {
  u64 x = c % n;
  u64 t = 1;
  while (x != 1) {
    x = mulmod(x, c, n);
    ++t;
  }
  return t;
}

inline bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; static_cast<u128>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<u64, unsigned>> trial_factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; static_cast<u128>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Legendre symbol by scanning the quadratic residues mod p. Tables are
// cached per prime so exhaustive sweeps stay affordable.
inline int legendre_scan(u64 a, u64 p) {
  static std::map<u64, std::vector<bool>> tables;
  a %= p;
  if (a == 0) return 0;
  auto it = tables.find(p);
  if (it == tables.end()) {
    std::vector<bool> is_residue(p, false);
    for (u64 r = 1; r < p; ++r) is_residue[mulmod(r, r, p)] = true;
    it = tables.emplace(p, std::move(is_residue)).first;
  }
  return it->second[a] ? 1 : -1;
}

inline int jacobi_by_legendre(u64 a, u64 n) {
  int result = 1;
  for (const auto& [p, e] : trial_factor(n)) {
    const int l = legendre_scan(a, p);
    if (l == 0) return 0;
    if (e % 2 == 1 && l == -1) result = -result;
  }
  return result;
}

// Full classification of one semiprime, mirroring the definitions rather
// than the implementation: orders by multiplication chain, witnesses by
// naive powering, odd-order recovery by peeling the square tower.
struct ClassifierTable {
  u64 n = 0;
  u64 total = 0;
  u64 squares = 0;
  u64 even_orders = 0;
  u64 standard_success = 0;
  u64 recovery_success = 0;
  u64 nonsquare_success = 0;
  u64 group_size = 0;        // includes c = 1
  u64 group_even_orders = 0; // c = 1 counts as odd
};

inline ClassifierTable classify_semiprime(u64 n) {
  ClassifierTable t;
  t.n = n;
  t.group_size = 1;
  for (u64 c = 2; c < n; ++c) {
    if (gcd(c, n) != 1) continue;
    ++t.group_size;
    ++t.total;
    const u64 ord = order_by_chain(c, n);
    const bool square = is_square(c);
    const bool even = ord % 2 == 0;
    t.squares += square;
    t.even_orders += even;
    t.group_even_orders += even;

    bool standard_ok = false;
    bool recovery_ok = false;
    if (even) {
      const u64 x = powmod_naive(c, ord / 2, n);
      standard_ok = x != n - 1;
      recovery_ok = standard_ok;
    } else if (square) {
      u64 root = c;
      unsigned tower = 0;
      while (is_square(root)) {
        root = isqrt(root);
        ++tower;
      }
      for (int j = static_cast<int>(tower) - 1; j >= 0; --j) {
        const u64 x = powmod_naive(root, (u64{1} << j) * ord, n);
        if (x == 1) continue;
        recovery_ok = x != n - 1;
        break;
      }
    }
    t.standard_success += standard_ok;
    t.recovery_success += recovery_ok;
    t.nonsquare_success += !square && standard_ok;
  }
  return t;
}

}  // namespace oracle
