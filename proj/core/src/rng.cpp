#include "sfa/rng.hpp"

#include <cstddef>
#include <vector>

namespace sfa {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  return mix64(state_);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix64(seed + 0x9E3779B97F4A7C15ull) ^
             mix64(index * 0xD1B54A32D192ED03ull + 0x2545F4914F6CDD1Dull));
}

Natural Rng::below(const Natural& bound) {
  if (bound < 1) throw domain_error("Rng::below: bound must be >= 1");
  if (bound == 1) return 0;

  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const std::uint64_t top_mask =
      top_bits >= 64 ? ~0ull : ((std::uint64_t{1} << top_bits) - 1);

  std::vector<std::uint64_t> buf(words);
  for (;;) {
    for (std::size_t i = 0; i < words; ++i) buf[i] = next_u64();
    buf[words - 1] &= top_mask;
    Natural draw;
    mpz_import(draw.get_mpz_t(), words, -1 /*lsw first*/, sizeof(std::uint64_t),
               0, 0, buf.data());
    if (draw < bound) return draw;
  }
}

}  // namespace sfa
