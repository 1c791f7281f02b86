#pragma once

namespace invstat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace invstat
