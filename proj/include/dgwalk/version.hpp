#pragma once

namespace dgw {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dgw
