#pragma once

namespace fractalts {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fractalts
