#pragma once

#include <cstdint>

#include "sfa/arith.hpp"
#include "sfa/primes.hpp"

namespace sfa {

// The multiplicative order of `coprime` mod `modulus`, with its 2-adic split.
// Stand-in for the quantum order-finding subroutine: exact, minimal, and
// produced by one of two independent classical oracles.
struct OrderRecord {
  Natural modulus;
  Natural coprime;
  Natural order;
  TwoAdicSplit split;
};

// The order seen through the CRT: residues of the coprime mod each prime
// and their component orders. lcm(t1, t2) equals the full order.
struct CrtOrderView {
  Natural c1;
  Natural c2;
  Natural t1;
  Natural t2;
};

inline constexpr std::uint64_t kDefaultOrderIterationCap = std::uint64_t{1} << 24;

// Walks the multiplication chain c, c^2, c^3, ... until it reaches 1.
// Requires gcd(c, n) = 1 and 1 < c < n. Meant for n up to ~1e6.
OrderRecord order_bruteforce(const Natural& c, const Natural& n,
                             std::uint64_t iteration_cap = kDefaultOrderIterationCap);

// Computes the order from the known factorization of n: per prime p_i,
// divides p_i - 1 down by the prime factors of p_i - 1, then combines the
// component orders with lcm. Polynomial in bit length.
OrderRecord order_with_factors(const Natural& c, const Semiprime& sp);

CrtOrderView component_orders(const Natural& c, const Semiprime& sp);

// Variants for sweeps: factor p_i - 1 once, reuse across every coprime.
OrderRecord order_with_factors(const Natural& c, const Semiprime& sp,
                               const Factorization& p1_pred_factors,
                               const Factorization& p2_pred_factors);
CrtOrderView component_orders(const Natural& c, const Semiprime& sp,
                              const Factorization& p1_pred_factors,
                              const Factorization& p2_pred_factors);

}  // namespace sfa
