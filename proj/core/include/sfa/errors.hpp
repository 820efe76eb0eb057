#pragma once

#include <stdexcept>

namespace sfa {

// A caller broke a documented precondition.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configurable budget (iteration cap, rejection draws, enumeration range)
// ran out before the operation finished.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal postcondition failed. This is a bug, not bad input.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace sfa
