#pragma once

namespace swanson {

inline constexpr const char* version = "0.1.0";

}  // namespace swanson
