#include "dgen/divisor_scan.hpp"

namespace dgen {

const char* side_name(Side s) { return s == Side::XWalk ? "x" : "y"; }

bool is_divisor_at_x(const Anchor& a, u64 k) { return x_residual(a, k).residual == 0; }

bool is_divisor_at_y(const Anchor& a, u64 k) { return y_residual(a, k).residual == 0; }

std::optional<u128> witness_at_x(const Anchor& a, u64 k) {
  if (!is_divisor_at_x(a, k)) return std::nullopt;
  return rprime(a, k) / (a.x0 - k);
}

std::optional<u128> witness_at_y(const Anchor& a, u64 k) {
  if (!is_divisor_at_y(a, k)) return std::nullopt;
  return rprime(a, k) / (a.y0 + k);
}

std::vector<FactorPair> scan_divisor_pairs(const Anchor& a) {
  std::vector<FactorPair> pairs;
  for (u64 k = 0; k < a.x0; ++k) {
    if (is_divisor_at_x(a, k)) pairs.push_back({a.x0 - k, x_quotient(a, k), k, Side::XWalk});
  }
  return pairs;
}

std::optional<u64> smallest_nontrivial_divisor(u64 n) {
  if (n < 2) throw out_of_domain("smallest nontrivial divisor requires n >= 2");
  const Anchor a = init_anchor(n);
  // k = x0 - 1 is divisor 1; walk back from divisor 2 toward x0.
  for (u64 k = a.x0 - 1; k-- > 0;) {
    if (is_divisor_at_x(a, k)) return a.x0 - k;
  }
  return std::nullopt;
}

}  // namespace dgen
