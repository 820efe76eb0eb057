#include "sfa/arith.hpp"

#include <utility>

namespace sfa {

Natural gcd(const Natural& x, const Natural& y) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Natural lcm(const Natural& x, const Natural& y) {
  if (x == 0 || y == 0) return 0;
  return x / gcd(x, y) * y;
}

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus) {
  if (modulus < 2) throw domain_error("mod_pow: modulus must be >= 2");
  Natural result = 1;
  Natural sq = base % modulus;
  const std::size_t bits =
      exp == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = result * sq % modulus;
    if (i + 1 < bits) sq = sq * sq % modulus;
  }
  return result;
}

Natural integer_sqrt(const Natural& x) {
  if (x < 0) throw domain_error("integer_sqrt: negative input");
  Natural root;
  mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
  return root;
}

bool is_perfect_square(const Natural& x) {
  if (x < 0) return false;
  Natural root = integer_sqrt(x);
  return root * root == x;
}

SquareDecomposition decompose_square(const Natural& b) {
  if (b < 2) throw domain_error("decompose_square: input must be >= 2");
  SquareDecomposition out{b, b, 0};
  while (is_perfect_square(out.root)) {
    out.root = integer_sqrt(out.root);
    ++out.exponent;
  }
  return out;
}

TwoAdicSplit two_adic_split(const Natural& t) {
  if (t < 1) throw domain_error("two_adic_split: input must be >= 1");
  const auto exponent =
      static_cast<unsigned>(mpz_scan1(t.get_mpz_t(), 0));
  return {exponent, t >> exponent};
}

int jacobi(const Natural& a_in, const Natural& n_in) {
  if (n_in < 3 || is_even(n_in))
    throw domain_error("jacobi: modulus must be odd and >= 3");
  Natural a = a_in % n_in;
  Natural n = n_in;
  int result = 1;
  while (a != 0) {
    while (is_even(a)) {
      a >>= 1;
      const unsigned long n_mod_8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (n_mod_8 == 3 || n_mod_8 == 5) result = -result;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

CrtResidues crt_split(const Natural& c, const Natural& p1, const Natural& p2) {
  if (p1 < 3 || p2 < 3 || is_even(p1) || is_even(p2) || p1 == p2)
    throw domain_error("crt_split: moduli must be distinct odd primes");
  if (c < 0 || c >= p1 * p2)
    throw domain_error("crt_split: c must lie in [0, p1*p2)");
  return {c % p1, c % p2};
}

}  // namespace sfa
