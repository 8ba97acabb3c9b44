#pragma once

namespace samtk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace samtk
