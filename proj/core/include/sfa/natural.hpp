#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "sfa/errors.hpp"

namespace sfa {

// Exact nonnegative integer. Everything in this library is integer
// arithmetic on these; nothing is rounded through a double.
using Natural = mpz_class;

inline bool is_even(const Natural& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
inline bool is_odd(const Natural& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// Parses a decimal string; rejects empty input, signs, and stray characters.
Natural natural_from_string(const std::string& text);

// Checked narrowing. Throws domain_error when x does not fit.
std::uint64_t to_u64(const Natural& x);

}  // namespace sfa
