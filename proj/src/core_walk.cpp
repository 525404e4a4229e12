#include "dgen/core_walk.hpp"

#include <string>

namespace dgen {

namespace {

void require_x_domain(const Anchor& a, u64 k) {
  if (k >= a.x0) {
    throw out_of_domain("X walk step k=" + std::to_string(k) + " outside [0, " +
                        std::to_string(x_last_k(a)) + "]");
  }
}

void require_y_domain(const Anchor& a, u64 k) {
  if (k > y_last_k(a)) {
    throw out_of_domain("Y walk step k=" + std::to_string(k) + " outside [0, " +
                        std::to_string(y_last_k(a)) + "]");
  }
}

u128 second_difference(const WalkState& s) {
  return static_cast<u128>(2) * s.k + 1 + s.anchor.delta;
}

}  // namespace

u64 isqrt(u64 n) {
  if (n < 2) return n;
  // Start above the root; Newton from above decreases monotonically to it.
  const int bits = 64 - __builtin_clzll(n);
  u64 x = u64{1} << ((bits + 1) / 2);
  while (true) {
    const u64 next = (x + n / x) / 2;
    if (next >= x) return x;
    x = next;
  }
}

Anchor init_anchor(u64 n) {
  if (n == 0) throw out_of_domain("n must be >= 1");
  Anchor a;
  a.n = n;
  a.x0 = isqrt(n);
  a.y0 = n / a.x0;
  a.r0 = n - a.x0 * a.y0;
  a.delta = a.y0 - a.x0;
  return a;
}

u128 rprime(const Anchor& a, u64 k) {
  const u128 kk = k;
  return a.r0 + kk * a.delta + kk * kk;
}

DivisorResidual x_residual(const Anchor& a, u64 k) {
  require_x_domain(a, k);
  const u64 divisor = a.x0 - k;
  // On the X walk (x0-k)(y0+k) >= 0, so r' <= n fits in 64 bits.
  const auto rp = static_cast<u64>(rprime(a, k));
  return {divisor, rp % divisor};
}

u64 x_quotient(const Anchor& a, u64 k) {
  require_x_domain(a, k);
  const u64 divisor = a.x0 - k;
  const auto rp = static_cast<u64>(rprime(a, k));
  return (a.y0 + k) + rp / divisor;
}

DivisorResidual y_residual(const Anchor& a, u64 k) {
  require_y_domain(a, k);
  const u64 divisor = a.y0 + k;
  return {divisor, static_cast<u64>(rprime(a, k) % divisor)};
}

u64 y_quotient(const Anchor& a, u64 k) {
  require_y_domain(a, k);
  const u64 divisor = a.y0 + k;
  // x'_k = x0 - k turns negative once k > x0.
  const i128 unreduced = static_cast<i128>(a.x0) - static_cast<i128>(k);
  const i128 q = unreduced + static_cast<i128>(rprime(a, k) / divisor);
  return static_cast<u64>(q);
}

WalkState x_state(const Anchor& a, u64 k) {
  const auto [divisor, residual] = x_residual(a, k);
  return {Direction::XDecrement, a, k, divisor, x_quotient(a, k), residual, rprime(a, k)};
}

WalkState y_state(const Anchor& a, u64 k) {
  const auto [divisor, residual] = y_residual(a, k);
  return {Direction::YIncrement, a, k, divisor, y_quotient(a, k), residual, rprime(a, k)};
}

WalkState x_walk_step(const WalkState& s) {
  if (s.direction != Direction::XDecrement) throw std::invalid_argument("x_walk_step on a Y walk state");
  if (s.divisor < 2) throw end_of_walk("X walk already at divisor 1");

  WalkState next = s;
  next.k = s.k + 1;
  next.divisor = s.divisor - 1;
  // n = (x-1)*y + (r+y); r + y < n for x >= 2.
  const u64 carry = s.residual + s.quotient;
  next.quotient = s.quotient + carry / next.divisor;
  next.residual = carry % next.divisor;
  next.rprime = s.rprime + second_difference(s);
  return next;
}

WalkState y_walk_step(const WalkState& s) {
  if (s.direction != Direction::YIncrement) throw std::invalid_argument("y_walk_step on an X walk state");
  if (s.divisor >= s.anchor.n) throw end_of_walk("Y walk already at divisor n");

  WalkState next = s;
  next.k = s.k + 1;
  next.divisor = s.divisor + 1;
  // n = (y+1)*x + (r-x)
  const i128 t = static_cast<i128>(s.residual) - static_cast<i128>(s.quotient);
  const i128 d = next.divisor;
  const i128 q = floor_div(t, d);
  next.quotient = static_cast<u64>(static_cast<i128>(s.quotient) + q);
  next.residual = static_cast<u64>(t - d * q);
  next.rprime = s.rprime + second_difference(s);
  return next;
}

}  // namespace dgen
