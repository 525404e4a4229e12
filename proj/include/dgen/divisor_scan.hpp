#pragma once

#include <optional>
#include <vector>

#include "dgen/core_walk.hpp"

namespace dgen {

enum class Side { XWalk, YWalk };

const char* side_name(Side s);  // "x" / "y"

struct FactorPair {
  u64 small = 0;
  u64 large = 0;
  u64 k_found = 0;
  Side side = Side::XWalk;

  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

// A divisor is a zero of the reduced residual: r'(k) is a multiple of the
// current divisor exactly when that divisor divides n.
bool is_divisor_at_x(const Anchor& a, u64 k);
bool is_divisor_at_y(const Anchor& a, u64 k);

/// Multiplier m with r'(k) == m * divisor, or nullopt when the divisor
/// does not divide n.
std::optional<u128> witness_at_x(const Anchor& a, u64 k);
std::optional<u128> witness_at_y(const Anchor& a, u64 k);

/// Every divisor pair (d, n/d) with d <= isqrt(n), in increasing k
/// (decreasing d). Cofactors come from the quotient generator.
std::vector<FactorPair> scan_divisor_pairs(const Anchor& a);

/// Least d >= 2 dividing n, or nullopt when n is prime. Throws
/// out_of_domain for n < 2.
std::optional<u64> smallest_nontrivial_divisor(u64 n);

}  // namespace dgen
