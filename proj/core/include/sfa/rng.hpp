#pragma once

#include <cstdint>

#include "sfa/natural.hpp"

namespace sfa {

// Counter-friendly 64-bit generator (splitmix64). `stream(seed, index)`
// derives an independent generator per index, so samplers can be
// partitioned across threads and still produce results that do not depend
// on the partitioning.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform draw from [0, bound) by rejection on bit-masked words. bound >= 1.
  Natural below(const Natural& bound);

  static Rng stream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

}  // namespace sfa
