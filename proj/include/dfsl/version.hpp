#pragma once

namespace dfsl {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace dfsl
