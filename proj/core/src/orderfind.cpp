#include "sfa/orderfind.hpp"

#include <string>

namespace sfa {
namespace {

void check_coprime_input(const Natural& c, const Natural& n, const char* who) {
  if (c <= 1 || c >= n)
    throw domain_error(std::string(who) + ": coprime must satisfy 1 < c < n");
  if (gcd(c, n) != 1)
    throw domain_error(std::string(who) + ": inputs share a factor");
}

// Order of c mod p in the cyclic group of size p - 1, given the prime
// factorization of p - 1.
Natural component_order(const Natural& c, const Natural& p,
                        const Factorization& group_factors) {
  Natural order = p - 1;
  const Natural residue = c % p;
  for (const auto& pp : group_factors) {
    for (unsigned i = 0; i < pp.multiplicity; ++i) {
      const Natural candidate = order / pp.prime;
      if (mod_pow(residue, candidate, p) != 1) break;
      order = candidate;
    }
  }
  return order;
}

}  // namespace

OrderRecord order_bruteforce(const Natural& c, const Natural& n,
                             std::uint64_t iteration_cap) {
  check_coprime_input(c, n, "order_bruteforce");
  Natural power = c;
  Natural order = 1;
  while (power != 1) {
    power = power * c % n;
    ++order;
    if (order > iteration_cap)
      throw resource_error("order_bruteforce: iteration cap exceeded");
  }
  return {n, c, order, two_adic_split(order)};
}

OrderRecord order_with_factors(const Natural& c, const Semiprime& sp,
                               const Factorization& p1_pred_factors,
                               const Factorization& p2_pred_factors) {
  check_coprime_input(c, sp.n, "order_with_factors");
  const Natural t1 = component_order(c, sp.p1, p1_pred_factors);
  const Natural t2 = component_order(c, sp.p2, p2_pred_factors);
  const Natural order = lcm(t1, t2);
  return {sp.n, c, order, two_adic_split(order)};
}

OrderRecord order_with_factors(const Natural& c, const Semiprime& sp) {
  return order_with_factors(c, sp, factorize_small(sp.p1 - 1),
                            factorize_small(sp.p2 - 1));
}

CrtOrderView component_orders(const Natural& c, const Semiprime& sp,
                              const Factorization& p1_pred_factors,
                              const Factorization& p2_pred_factors) {
  check_coprime_input(c, sp.n, "component_orders");
  return {c % sp.p1, c % sp.p2, component_order(c, sp.p1, p1_pred_factors),
          component_order(c, sp.p2, p2_pred_factors)};
}

CrtOrderView component_orders(const Natural& c, const Semiprime& sp) {
  return component_orders(c, sp, factorize_small(sp.p1 - 1),
                          factorize_small(sp.p2 - 1));
}

}  // namespace sfa
