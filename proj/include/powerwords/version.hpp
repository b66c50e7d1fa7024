#pragma once

namespace powerwords {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace powerwords
