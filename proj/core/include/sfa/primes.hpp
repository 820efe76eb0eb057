#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sfa/natural.hpp"
#include "sfa/rng.hpp"

namespace sfa {

// N = p1 * p2 with p1 < p2, both odd primes. hard_form is set when both
// primes are congruent to 3 mod 4, i.e. (p_i - 1)/2 is odd.
struct Semiprime {
  Natural n;
  Natural p1;
  Natural p2;
  bool hard_form;
};

// Validates primality, oddness and distinctness; orders the primes.
Semiprime make_semiprime(const Natural& p1, const Natural& p2);

struct PrimePower {
  Natural prime;
  unsigned multiplicity;
};

// Primes strictly increasing; product of prime^multiplicity is the input.
using Factorization = std::vector<PrimePower>;

// Deterministic Miller-Rabin below 2^64 (witness set 2..37); above that,
// `rounds` pseudo-random witnesses derived from n (error bound 4^-rounds).
bool is_prime(const Natural& n, unsigned rounds = 40);

// Trial division by primes below 1e5, then Pollard rho on what remains.
// Every reported prime passes is_prime; an unfactorable cofactor raises
// resource_error instead of being mislabeled.
Factorization factorize_small(const Natural& n);

// The base p when n = p^k for prime p and k >= 1.
std::optional<Natural> prime_power_base(const Natural& n);

// Samples distinct primes congruent to 3 mod 4 from [3, 2^ceil(bits/2)).
// Deterministic given the generator state. bits >= 6.
Semiprime gen_hard_semiprime(unsigned bits, Rng& rng);

// All semiprimes p1*p2 < limit (distinct odd primes), ascending, each
// flagged hard_form where applicable. limit <= 1e6.
std::vector<Semiprime> enumerate_hard_semiprimes(const Natural& limit);

}  // namespace sfa
