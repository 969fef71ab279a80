#pragma once

namespace fieldent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fieldent
