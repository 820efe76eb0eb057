#include "sfa/pipeline.hpp"

#include <string>
#include <utility>

namespace sfa {
namespace {

Factors factors_from_witness(const Natural& x, const Natural& n,
                             FactorMethod method, unsigned collapse_steps) {
  Natural p = gcd(x - 1, n);
  Natural q = gcd(x + 1, n);
  if (p > q) std::swap(p, q);
  if (p <= 1 || q >= n || p * q != n)
    throw invariant_error("factor extraction: witness " + x.get_str() +
                          " gave a trivial or inconsistent split of " + n.get_str());
  return {std::move(p), std::move(q), method, collapse_steps, x};
}

}  // namespace

FactorOutcome classical_postprocess(const OrderRecord& rec) {
  if (is_odd(rec.order))
    throw domain_error("classical_postprocess: order must be even");
  const Natural x = mod_pow(rec.coprime, rec.order / 2, rec.modulus);
  if (x == rec.modulus - 1) return TrivialFailure{x};
  if (x == 1)
    throw invariant_error(
        "classical_postprocess: witness 1 contradicts order minimality");
  return factors_from_witness(x, rec.modulus, FactorMethod::standard, 0);
}

FactorOutcome odd_order_square_factor(const Natural& b, const Natural& s,
                                      const Natural& n) {
  if (is_even(s)) throw domain_error("odd_order_square_factor: order must be odd");
  if (b < 2 || !is_perfect_square(b))
    throw domain_error("odd_order_square_factor: coprime must be a perfect square");
  if (gcd(b, n) != 1)
    throw domain_error("odd_order_square_factor: inputs share a factor");

  const SquareDecomposition dec = decompose_square(b);
  // x is the integer value of b^(s/2) = root^(2^(m-1) * s).
  const Natural x = mod_pow(dec.root, (Natural(1) << (dec.exponent - 1)) * s, n);
  if (x == 1) return root_collapse(dec.root, dec.exponent, s, n);
  if (x == n - 1) return TrivialFailure{x};
  return factors_from_witness(x, n, FactorMethod::odd_order_square, 0);
}

FactorOutcome root_collapse(const Natural& a, unsigned m, const Natural& s,
                            const Natural& n) {
  if (is_even(s)) throw domain_error("root_collapse: order must be odd");
  if (m < 1) throw domain_error("root_collapse: tower exponent must be >= 1");
  if (a < 2 || is_perfect_square(a))
    throw domain_error("root_collapse: root must be a non-square >= 2");
  if (gcd(a, n) != 1) throw domain_error("root_collapse: inputs share a factor");

  // x_j = a^(2^j * s), built upward by squaring, consumed downward.
  std::vector<Natural> tower(m);
  tower[0] = mod_pow(a, s, n);
  for (unsigned j = 1; j < m; ++j) tower[j] = tower[j - 1] * tower[j - 1] % n;

  for (unsigned j = m; j-- > 0;) {
    const Natural& x = tower[j];
    if (x == 1) continue;
    const unsigned steps = m - 1 - j;
    if (x == n - 1) return TrivialFailure{x};
    return factors_from_witness(x, n, FactorMethod::root_collapse, steps);
  }
  return UnusableOddOrder{};
}

FactorOutcome factor_with_recovery(const OrderRecord& rec) {
  if (is_even(rec.order)) return classical_postprocess(rec);
  if (is_perfect_square(rec.coprime))
    return odd_order_square_factor(rec.coprime, rec.order, rec.modulus);
  return UnusableOddOrder{};
}

CoprimeDraw pick_coprime(const Natural& n, CoprimeStrategy strategy, Rng& rng,
                         std::uint64_t draw_budget) {
  if (n < 15 || is_even(n))
    throw domain_error("pick_coprime: n must be an odd composite >= 15");
  for (std::uint64_t draw = 0; draw < draw_budget; ++draw) {
    Natural c = 2 + rng.below(n - 2);  // uniform on {2, ..., n-1}
    Natural g = gcd(c, n);
    if (g > 1) return {std::move(c), std::move(g)};
    switch (strategy) {
      case CoprimeStrategy::uniform:
        return {std::move(c), std::nullopt};
      case CoprimeStrategy::avoid_squares:
        if (!is_perfect_square(c)) return {std::move(c), std::nullopt};
        break;
      case CoprimeStrategy::jacobi_screen:
        if (jacobi(c, n) == -1) return {std::move(c), std::nullopt};
        break;
    }
  }
  throw resource_error("pick_coprime: rejection budget exhausted");
}

FullFactorResult full_factor(const Natural& n, CoprimeStrategy strategy,
                             OrderOracle oracle, unsigned max_attempts,
                             std::uint64_t seed) {
  if (n < 2) throw domain_error("full_factor: n must be >= 2");
  if (is_even(n))
    throw domain_error("full_factor: n is even; divide out 2 classically");
  if (is_prime(n)) throw domain_error("full_factor: n is prime");
  if (auto base = prime_power_base(n))
    throw domain_error("full_factor: n is the prime power " + base->get_str() +
                       "^k; take integer roots classically");

  // The factored oracle needs the factor pair up front.
  std::optional<Semiprime> sp;
  std::optional<Factorization> f1, f2;
  if (oracle == OrderOracle::factored) {
    Factorization fac = factorize_small(n);
    if (fac.size() != 2 || fac[0].multiplicity != 1 || fac[1].multiplicity != 1)
      throw domain_error(
          "full_factor: the factored oracle requires a semiprime n");
    sp = make_semiprime(fac[0].prime, fac[1].prime);
    f1 = factorize_small(sp->p1 - 1);
    f2 = factorize_small(sp->p2 - 1);
  }

  FullFactorResult result{n, {}, false, 0, 0, FactorVia::none};
  Rng rng(seed);
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    CoprimeDraw draw = pick_coprime(n, strategy, rng);
    if (draw.factor) {
      FactorAttempt log{draw.value, draw.factor, std::nullopt, std::nullopt};
      result.attempts.push_back(std::move(log));
      result.success = true;
      result.p = *draw.factor;
      result.q = n / *draw.factor;
      if (result.p > result.q) std::swap(result.p, result.q);
      result.via = FactorVia::early_gcd;
      return result;
    }

    OrderRecord rec = oracle == OrderOracle::factored
                          ? order_with_factors(draw.value, *sp, *f1, *f2)
                          : order_bruteforce(draw.value, n);
    FactorOutcome outcome = factor_with_recovery(rec);
    result.attempts.push_back(
        {draw.value, std::nullopt, std::move(rec), outcome});

    if (const auto* factors = std::get_if<Factors>(&outcome)) {
      result.success = true;
      result.p = factors->p;
      result.q = factors->q;
      switch (factors->method) {
        case FactorMethod::standard: result.via = FactorVia::standard; break;
        case FactorMethod::odd_order_square:
          result.via = FactorVia::odd_order_square;
          break;
        case FactorMethod::root_collapse:
          result.via = FactorVia::root_collapse;
          break;
      }
      return result;
    }
  }
  return result;
}

}  // namespace sfa
