#pragma once

// Residual/quotient generators for n = x*y + r over the two intervals
// anchored at floor(sqrt(n)).
//
// Both walks start from the anchor (x0, y0, r0) with x0 = isqrt(n),
// y0 = n div x0, r0 = n - x0*y0 and delta = y0 - x0. At step k the X walk
// divides by x0 - k (k in [0, x0-1]) and the Y walk divides by y0 + k
// (k in [0, n-y0]). Both share the unreduced residual
//
//     r'(k) = r0 + k*delta + k^2 = n - (x0-k)*(y0+k)
//
// which reduces to the true residual modulo the current divisor. Quotients
// follow by adding r'(k) div divisor to the unreduced cofactor (y0+k on the
// X walk, x0-k on the Y walk).

#include <stdexcept>

#include "dgen/wide_int.hpp"

namespace dgen {

/// Thrown for inputs outside an operation's domain (n = 0, k past the walk).
class out_of_domain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when stepping a walk that is already at its final divisor.
class end_of_walk : public out_of_domain {
 public:
  using out_of_domain::out_of_domain;
};

enum class Direction { XDecrement, YIncrement };

struct Anchor {
  u64 n = 0;
  u64 x0 = 0;
  u64 y0 = 0;
  u64 r0 = 0;
  u64 delta = 0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// One state of a difference-equation walk. `divisor` is x_k on the X walk
/// and y_k on the Y walk; `quotient` is the matching cofactor so that
/// n == divisor * quotient + residual holds at every k.
struct WalkState {
  Direction direction = Direction::XDecrement;
  Anchor anchor;
  u64 k = 0;
  u64 divisor = 0;
  u64 quotient = 0;
  u64 residual = 0;
  u128 rprime = 0;

  friend bool operator==(const WalkState&, const WalkState&) = default;
};

struct DivisorResidual {
  u64 divisor = 0;
  u64 residual = 0;

  friend bool operator==(const DivisorResidual&, const DivisorResidual&) = default;
};

/// Exact floor(sqrt(n)) by integer Newton iteration.
u64 isqrt(u64 n);

Anchor init_anchor(u64 n);

/// r0 + k*delta + k^2. Exact on both walk domains, where it is bounded by
/// n + n^2 < 2^128. delta is at most 2 for every n.
u128 rprime(const Anchor& a, u64 k);

// Last valid step index on each walk.
constexpr u64 x_last_k(const Anchor& a) { return a.x0 - 1; }
constexpr u64 y_last_k(const Anchor& a) { return a.n - a.y0; }

DivisorResidual x_residual(const Anchor& a, u64 k);
u64 x_quotient(const Anchor& a, u64 k);
DivisorResidual y_residual(const Anchor& a, u64 k);
u64 y_quotient(const Anchor& a, u64 k);

// Closed-form walk states. x_state(a, 0) / y_state(a, 0) are the anchor
// states the recurrences start from.
WalkState x_state(const Anchor& a, u64 k);
WalkState y_state(const Anchor& a, u64 k);

/// x_{k+1} = x_k - 1; the carry (r_k + y_k) is redistributed over the new
/// divisor. r' advances by its second difference 2k + 1 + delta.
WalkState x_walk_step(const WalkState& s);

/// y_{k+1} = y_k + 1; the operand r_k - x_k is usually negative, so the
/// redistribution uses floored division to keep the residual in [0, y).
WalkState y_walk_step(const WalkState& s);

}  // namespace dgen
