#include "sfa/primes.hpp"

#include <algorithm>
#include <cstddef>

#include "sfa/arith.hpp"

namespace sfa {
namespace {

constexpr std::uint32_t kTrialDivisionBound = 100'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<bool> composite(kTrialDivisionBound, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i < kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i;
           j < kTrialDivisionBound; j += i)
        composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
  }();
  return table;
}

bool miller_rabin_witness(const Natural& n, const Natural& witness,
                          const Natural& odd_part, unsigned two_exp) {
  // true means `witness` proves n composite.
  Natural x = mod_pow(witness, odd_part, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < two_exp; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Proven deterministic for all n < 2^64.
constexpr std::uint32_t kDeterministicWitnesses[] = {2,  3,  5,  7,  11, 13,
                                                     17, 19, 23, 29, 31, 37};

// Pollard rho, Brent variant with batched gcd. Deterministic: the
// polynomial increment steps 1, 2, 3, ... across restarts.
std::optional<Natural> pollard_rho(const Natural& n, std::uint64_t budget) {
  std::uint64_t spent = 0;
  for (Natural increment = 1; spent < budget; ++increment) {
    Natural y = 2, r = 1, q = 1, factor = 1, saved = y;
    Natural x;
    const std::uint64_t batch = 128;
    while (factor == 1 && spent < budget) {
      x = y;
      for (Natural i = 0; i < r; ++i) y = (y * y + increment) % n;
      Natural done = 0;
      while (done < r && factor == 1 && spent < budget) {
        saved = y;
        for (std::uint64_t i = 0; i < batch && done < r; ++i, ++done) {
          y = (y * y + increment) % n;
          Natural diff = x > y ? x - y : y - x;
          q = q * diff % n;
          ++spent;
        }
        factor = gcd(q, n);
      }
      r *= 2;
    }
    if (factor == n) {
      // Backtrack one step at a time from the last checkpoint.
      factor = 1;
      y = saved;
      while (factor == 1) {
        y = (y * y + increment) % n;
        Natural diff = x > y ? x - y : y - x;
        factor = gcd(diff, n);
        if (++spent >= budget) break;
      }
    }
    if (factor != 1 && factor != n) return factor;
  }
  return std::nullopt;
}

void factor_recursive(const Natural& n, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  // Perfect powers first: rho degenerates on p^2.
  if (auto base = prime_power_base(n)) {
    unsigned k = 0;
    Natural rest = n;
    while (rest % *base == 0) {
      rest /= *base;
      ++k;
    }
    out.push_back({*base, k});
    return;
  }
  auto factor = pollard_rho(n, std::uint64_t{1} << 26);
  if (!factor)
    throw resource_error("factorize_small: rho budget exhausted on cofactor " +
                         n.get_str());
  factor_recursive(*factor, out);
  factor_recursive(n / *factor, out);
}

}  // namespace

bool is_prime(const Natural& n, unsigned rounds) {
  if (n < 2) return false;
  for (std::uint32_t p : kDeterministicWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  const TwoAdicSplit split = two_adic_split(n - 1);
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (std::uint32_t w : kDeterministicWitnesses)
      if (miller_rabin_witness(n, w, split.odd_part, split.exponent))
        return false;
    return true;
  }
  // Witnesses derived from n itself keep results reproducible run to run.
  Rng rng(mpz_get_ui(n.get_mpz_t()) ^
          (static_cast<std::uint64_t>(mpz_sizeinbase(n.get_mpz_t(), 2)) << 32));
  for (unsigned i = 0; i < rounds; ++i) {
    Natural witness = 2 + rng.below(n - 3);
    if (miller_rabin_witness(n, witness, split.odd_part, split.exponent))
      return false;
  }
  return true;
}

Factorization factorize_small(const Natural& n) {
  if (n < 1) throw domain_error("factorize_small: input must be >= 1");
  Factorization out;
  Natural rest = n;
  for (std::uint32_t p : small_primes()) {
    if (Natural(p) * p > rest) break;
    if (rest % p == 0) {
      unsigned k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      out.push_back({p, k});
    }
  }
  if (rest > 1) factor_recursive(rest, out);
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  // Same prime can surface from two recursive branches.
  Factorization merged;
  for (const auto& pp : out) {
    if (!merged.empty() && merged.back().prime == pp.prime)
      merged.back().multiplicity += pp.multiplicity;
    else
      merged.push_back(pp);
  }
  return merged;
}

std::optional<Natural> prime_power_base(const Natural& n) {
  if (n < 2) return std::nullopt;
  if (is_prime(n)) return n;
  const std::size_t max_exp = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t k = 2; k <= max_exp; ++k) {
    Natural root;
    const int exact =
        mpz_root(root.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    if (exact != 0 && is_prime(root)) return root;
  }
  return std::nullopt;
}

Semiprime make_semiprime(const Natural& p1, const Natural& p2) {
  if (p1 == p2) throw domain_error("make_semiprime: primes must be distinct");
  if (is_even(p1) || is_even(p2))
    throw domain_error("make_semiprime: primes must be odd");
  if (!is_prime(p1) || !is_prime(p2))
    throw domain_error("make_semiprime: both factors must be prime");
  Natural lo = std::min(p1, p2);
  Natural hi = std::max(p1, p2);
  const bool hard = mpz_fdiv_ui(lo.get_mpz_t(), 4) == 3 &&
                    mpz_fdiv_ui(hi.get_mpz_t(), 4) == 3;
  return {lo * hi, lo, hi, hard};
}

Semiprime gen_hard_semiprime(unsigned bits, Rng& rng) {
  if (bits < 6) throw domain_error("gen_hard_semiprime: bits must be >= 6");
  const unsigned prime_bits = (bits + 1) / 2;
  const Natural bound = Natural(1) << prime_bits;
  constexpr std::uint64_t kDrawBudget = 100'000;

  auto draw_prime = [&](std::uint64_t& budget) {
    while (budget-- > 0) {
      Natural candidate = rng.below(bound);
      mpz_setbit(candidate.get_mpz_t(), 0);
      mpz_setbit(candidate.get_mpz_t(), 1);  // forces candidate ≡ 3 (mod 4)
      if (candidate >= 3 && is_prime(candidate)) return candidate;
    }
    throw resource_error("gen_hard_semiprime: sampling budget exhausted");
  };

  std::uint64_t budget = kDrawBudget;
  Natural p1 = draw_prime(budget);
  Natural p2 = draw_prime(budget);
  while (p2 == p1) p2 = draw_prime(budget);
  return make_semiprime(p1, p2);
}

std::vector<Semiprime> enumerate_hard_semiprimes(const Natural& limit) {
  if (limit > 1'000'000)
    throw domain_error("enumerate_hard_semiprimes: limit above the 1e6 budget");
  const std::uint64_t lim = to_u64(std::max(Natural(0), limit));

  std::vector<std::uint64_t> primes;
  if (lim > 9) {
    const std::uint64_t sieve_to = lim / 3 + 1;
    std::vector<bool> composite(sieve_to + 1, false);
    for (std::uint64_t i = 3; i <= sieve_to; i += 2) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = i * i; j <= sieve_to; j += 2 * i) composite[j] = true;
    }
  }

  std::vector<Semiprime> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::uint64_t n = primes[i] * primes[j];
      if (n >= lim) break;
      const bool hard = primes[i] % 4 == 3 && primes[j] % 4 == 3;
      out.push_back({Natural(static_cast<unsigned long>(n)),
                     Natural(static_cast<unsigned long>(primes[i])),
                     Natural(static_cast<unsigned long>(primes[j])), hard});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Semiprime& a, const Semiprime& b) { return a.n < b.n; });
  return out;
}

}  // namespace sfa
