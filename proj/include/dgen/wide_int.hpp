#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dgen {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 v);
std::string to_string(i128 v);

/// Strict decimal parse: digits only, no sign, no whitespace, no radix
/// prefix. Returns nullopt on any malformed input or overflow.
std::optional<u64> parse_u64(std::string_view s);
std::optional<u128> parse_u128(std::string_view s);

// Floored division: quotient rounds toward negative infinity and the
// remainder lies in [0, d). Requires d > 0.
constexpr i128 floor_div(i128 a, i128 d) {
  i128 q = a / d;
  if ((a % d) != 0 && a < 0) --q;
  return q;
}

constexpr i128 floor_mod(i128 a, i128 d) {
  i128 r = a % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace dgen
