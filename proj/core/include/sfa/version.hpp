#pragma once

namespace sfa {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace sfa
