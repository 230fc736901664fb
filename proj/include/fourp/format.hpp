#pragma once

#include <string>

namespace fourp {

inline constexpr const char* kVersion = "0.1.0";

// Shortest decimal representation that round-trips the value (via
// std::to_chars), so that output bytes are stable across runs and thread
// counts.
std::string format_double(double v);
std::string format_long_double(long double v);

}  // namespace fourp
