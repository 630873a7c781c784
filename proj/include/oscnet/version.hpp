#pragma once

namespace oscnet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace oscnet
