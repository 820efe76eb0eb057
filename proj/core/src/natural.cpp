#include "sfa/natural.hpp"

namespace sfa {

Natural natural_from_string(const std::string& text) {
  if (text.empty()) throw domain_error("natural_from_string: empty input");
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw domain_error("natural_from_string: not a decimal natural: '" + text + "'");
  }
  Natural value;
  if (value.set_str(text, 10) != 0)
    throw domain_error("natural_from_string: not a decimal natural: '" + text + "'");
  return value;
}

std::uint64_t to_u64(const Natural& x) {
  if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64)
    throw domain_error("to_u64: value out of range: " + x.get_str());
  std::uint64_t lo = mpz_get_ui(x.get_mpz_t());
  if (mpz_sizeinbase(x.get_mpz_t(), 2) > 32) {
    // mpz_get_ui already returns the full 64-bit value on LP64; keep the
    // generic path for 32-bit limbs.
    Natural hi = x >> 32;
    lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         (mpz_get_ui(x.get_mpz_t()) & 0xFFFFFFFFull);
  }
  return lo;
}

}  // namespace sfa
