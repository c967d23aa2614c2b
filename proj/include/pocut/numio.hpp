#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pocut {

// Shortest round-trip decimal form (std::to_chars), so serialized doubles
// reload bit-identically and files stay readable.
inline std::string fmt_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

inline double parse_double(const std::string& s) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad number '" + s + "'");
  return x;
}

inline long long parse_int(const std::string& s) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + s + "'");
  return x;
}

inline std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad unsigned integer '" + s + "'");
  return x;
}

}  // namespace pocut
