#pragma once

#include "sfa/natural.hpp"

namespace sfa {

// base = root^(2^exponent) with root not itself a perfect square.
// exponent == 0 exactly when base is not a perfect square.
struct SquareDecomposition {
  Natural base;
  Natural root;
  unsigned exponent;
};

// t = 2^exponent * odd_part.
struct TwoAdicSplit {
  unsigned exponent;
  Natural odd_part;
};

struct CrtResidues {
  Natural r1;
  Natural r2;
};

// gcd(0, 0) is defined as 0.
Natural gcd(const Natural& x, const Natural& y);

// Least common multiple, computed exactly as x / gcd(x, y) * y. lcm with 0 is 0.
Natural lcm(const Natural& x, const Natural& y);

// base^exp mod modulus by binary square-and-multiply. modulus >= 2.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus);

// floor(sqrt(x)); result^2 <= x < (result + 1)^2.
Natural integer_sqrt(const Natural& x);

bool is_perfect_square(const Natural& x);

// Peels exact square roots while the value stays a perfect square.
// Non-square b comes back as (b, 0). Requires b >= 2.
SquareDecomposition decompose_square(const Natural& b);

// Requires t >= 1.
TwoAdicSplit two_adic_split(const Natural& t);

// Jacobi symbol (a|n) for odd n >= 3; 0 exactly when gcd(a, n) > 1.
int jacobi(const Natural& a, const Natural& n);

// (c mod p1, c mod p2) for distinct odd primes p1, p2 and 0 <= c < p1*p2.
CrtResidues crt_split(const Natural& c, const Natural& p1, const Natural& p2);

}  // namespace sfa
