#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

namespace pmeans {

// Locale-independent "%.15g"-style formatting (15 significant digits).
// All machine-readable output of the library goes through this.
inline std::string fmt15(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

// Strict parse of a double; returns NaN for an empty field.
inline double parse_double(std::string_view s) {
  if (s.empty()) return std::nan("");
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace pmeans
