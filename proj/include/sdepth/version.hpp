#pragma once

namespace sdepth {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sdepth
