#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace ising {

/// Shortest decimal form that parses back to the same double.
inline std::string format_exact(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

/// Nine significant digits, the fixed precision of all CSV output.
inline std::string format_sig9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace ising
