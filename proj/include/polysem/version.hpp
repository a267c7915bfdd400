#pragma once

namespace polysem {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace polysem
