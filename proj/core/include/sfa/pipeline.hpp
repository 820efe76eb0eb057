#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sfa/orderfind.hpp"
#include "sfa/rng.hpp"

namespace sfa {

enum class FactorMethod { standard, odd_order_square, root_collapse };

// Nontrivial factor pair recovered from a witness x: {p, q} are
// gcd(x - 1, N) and gcd(x + 1, N), normalized to p <= q, with p * q = N.
struct Factors {
  Natural p;
  Natural q;
  FactorMethod method;
  unsigned collapse_steps;  // meaningful for root_collapse only
  Natural witness;
};

// The witness landed on N - 1, so the gcds are 1 and N.
struct TrivialFailure {
  Natural witness;
};

// Odd order with no square structure to exploit.
struct UnusableOddOrder {};

using FactorOutcome = std::variant<Factors, TrivialFailure, UnusableOddOrder>;

enum class CoprimeStrategy { uniform, avoid_squares, jacobi_screen };

// Even-order post-processing: x = c^(t/2) mod N, factors from gcd(x -+ 1, N).
// Requires an even order. x = 1 cannot happen for a minimal order and is
// reported as invariant_error.
FactorOutcome classical_postprocess(const OrderRecord& rec);

// Odd-order recovery for a perfect-square coprime b with odd order s:
// evaluates the integer value of b^(s/2) through the square decomposition
// b = a^(2^m). Falls through to root_collapse when that value is 1.
FactorOutcome odd_order_square_factor(const Natural& b, const Natural& s,
                                      const Natural& n);

// Walks the square tower downward: x_j = a^(2^j * s) for j = m-1 .. 0,
// acting on the first x_j != 1. When even x_0 = 1 the root itself has odd
// order and nothing can be extracted.
FactorOutcome root_collapse(const Natural& a, unsigned m, const Natural& s,
                            const Natural& n);

// Full decision tree: even orders go through classical_postprocess; odd
// orders are recoverable only for square coprimes.
FactorOutcome factor_with_recovery(const OrderRecord& rec);

// A draw from (1, N). `factor` is set instead when gcd(value, N) > 1 --
// the sample itself already factors N.
struct CoprimeDraw {
  Natural value;
  std::optional<Natural> factor;
};

inline constexpr std::uint64_t kDefaultDrawBudget = 10'000;

// Rejection-samples a coprime according to the strategy. Deterministic
// given the generator state. Requires odd composite n >= 15.
CoprimeDraw pick_coprime(const Natural& n, CoprimeStrategy strategy, Rng& rng,
                         std::uint64_t draw_budget = kDefaultDrawBudget);

enum class OrderOracle { bruteforce, factored };

// One round of the retry loop, recorded for audit.
struct FactorAttempt {
  Natural coprime;
  std::optional<Natural> early_factor;   // gcd(coprime, n) when > 1
  std::optional<OrderRecord> record;     // absent on early-factor draws
  std::optional<FactorOutcome> outcome;  // absent on early-factor draws
};

enum class FactorVia { none, standard, odd_order_square, root_collapse, early_gcd };

struct FullFactorResult {
  Natural n;
  std::vector<FactorAttempt> attempts;
  bool success;
  Natural p;  // valid when success, p <= q
  Natural q;
  FactorVia via;
};

inline constexpr unsigned kDefaultMaxAttempts = 16;

// The outer retry loop: pick a coprime, find its order, post-process,
// repeat until factors appear or attempts run out. Rejects even, prime,
// and prime-power n up front -- those have classical shortcuts and the
// two-odd-prime analysis does not apply.
FullFactorResult full_factor(const Natural& n, CoprimeStrategy strategy,
                             OrderOracle oracle, unsigned max_attempts,
                             std::uint64_t seed);

}  // namespace sfa
