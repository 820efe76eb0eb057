#pragma once

#include <cstdint>

#include "sfa/pipeline.hpp"

namespace sfa {

// Exact classification of every coprime of a semiprime. Counts in the
// "factoring population" are over 1 < c < N; the whole-group pair
// (group_size, group_even_order_count) additionally counts c = 1 (order 1,
// odd), which is the population the exact even-order law is stated over.
// Both denominators are kept explicit on purpose.
struct EnumerationReport {
  Semiprime sp;

  Natural total_coprimes;       // #{1 < c < N : gcd(c, N) = 1}
  Natural square_coprimes;
  Natural nonsquare_coprimes;
  Natural even_order_count;
  Natural odd_order_count;
  Natural standard_success;     // even order and witness != -1
  Natural recovery_success;     // standard plus the odd-order techniques
  Natural nonsquare_success;    // standard successes among non-squares

  Natural group_size;             // phi(N), c = 1 included
  Natural group_even_order_count;

  mpq_class p_even_order;   // group_even_order_count / group_size
  mpq_class p_standard;     // standard_success / total_coprimes
  mpq_class p_recovery;     // recovery_success / total_coprimes
  mpq_class p_nonsquare;    // nonsquare_success / nonsquare_coprimes
  mpq_class ratio_standard_to_nonsquare;  // p_standard / p_nonsquare
  mpq_class ratio_bound;    // 1 - 1/(4*floor(sqrt(N))), floor keeps it conservative
};

inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;

// Walks every coprime 1 < c < N, finds its order through the factored
// oracle, and classifies it under standard post-processing, full recovery,
// and the non-square-restricted strategy. Also cross-checks, for every
// square coprime, that recovery agrees with standard processing of its
// root (success and witness), raising invariant_error otherwise.
// Deterministic for any worker count.
EnumerationReport enumerate_report(const Semiprime& sp, unsigned workers = 1);

// Fraction of the whole coprime group (c = 1 included) with even order.
// Exactly 3/4 for hard-form semiprimes.
mpq_class even_order_probability(const Semiprime& sp, unsigned workers = 1);

struct BoundCheck {
  mpq_class lhs;  // p_standard / p_nonsquare
  mpq_class rhs;  // 1 - 1/(4*floor(sqrt(N)))
  bool holds;     // lhs <= rhs
};

BoundCheck ratio_bound_check(const Semiprime& sp, unsigned workers = 1);
BoundCheck ratio_bound_check(const EnumerationReport& report);

// Sampled counterpart of EnumerationReport for semiprimes beyond the
// enumeration budget. Estimates carry binomial standard errors. Sample i
// draws from an rng stream keyed by (seed, i), so results are bit-identical
// for any worker count.
struct MonteCarloReport {
  Semiprime sp;
  std::uint64_t samples;
  std::uint64_t early_factor_draws;  // rejected gcd > 1 draws seen on the way

  std::uint64_t square_count;
  std::uint64_t nonsquare_count;
  std::uint64_t even_order_count;
  std::uint64_t standard_success;
  std::uint64_t recovery_success;
  std::uint64_t nonsquare_success;

  double p_even_order, se_even_order;
  double p_standard, se_standard;
  double p_recovery, se_recovery;
  double p_nonsquare, se_nonsquare;  // conditioned on non-square draws
};

MonteCarloReport monte_carlo_report(const Semiprime& sp, std::uint64_t samples,
                                    std::uint64_t seed, unsigned workers = 1);

}  // namespace sfa
