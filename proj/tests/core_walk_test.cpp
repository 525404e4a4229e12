#include "dgen/core_walk.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

namespace dgen {
namespace {

// Brute-force references local to this test.
u64 ref_isqrt(u64 n) {
  u64 lo = 0, hi = u64{1} << 32;  // invariant: lo^2 <= n < hi^2
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    if (static_cast<u128>(mid) * mid <= n) lo = mid; else hi = mid;
  }
  return lo;
}

i128 ref_rprime(const Anchor& a, u64 k) {
  return static_cast<i128>(a.n) - (static_cast<i128>(a.x0) - static_cast<i128>(k)) *
                                      (static_cast<i128>(a.y0) + static_cast<i128>(k));
}

// Same identity without the i128 product, for k where (x0-k)(y0+k) needs
// the full 128 bits.
u128 ref_rprime_wide(const Anchor& a, u64 k) {
  const u128 cofactor = static_cast<u128>(a.y0) + k;
  return k <= a.x0 ? a.n - (a.x0 - k) * cofactor : a.n + (k - a.x0) * cofactor;
}

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(0), 0u);
  EXPECT_EQ(isqrt(100), 10u);
  EXPECT_EQ(isqrt(99), 9u);
  EXPECT_EQ(isqrt(1), 1u);
  EXPECT_EQ(isqrt(2), 1u);
  EXPECT_EQ(isqrt(3), 1u);
  EXPECT_EQ(isqrt(4), 2u);
}

TEST(Isqrt, NearPerfectSquaresBeyondDoublePrecision) {
  constexpr u64 max = std::numeric_limits<u64>::max();
  EXPECT_EQ(isqrt(max), 4294967295u);
  const u64 sq = u64{4294967295} * 4294967295u;
  EXPECT_EQ(isqrt(sq), 4294967295u);
  EXPECT_EQ(isqrt(sq - 1), 4294967294u);
  for (u64 r : {u64{3037000499}, u64{94906265}, u64{1} << 31, (u64{1} << 31) + 12345}) {
    EXPECT_EQ(isqrt(r * r), r);
    EXPECT_EQ(isqrt(r * r - 1), r - 1);
    EXPECT_EQ(isqrt(r * r + 2 * r), r);
  }
}

TEST(Isqrt, MatchesBisectionOnRandomInputs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200000; ++i) {
    const u64 n = rng() >> (rng() % 64);
    ASSERT_EQ(isqrt(n), ref_isqrt(n)) << n;
  }
}

TEST(InitAnchor, Examples) {
  EXPECT_EQ(init_anchor(100), (Anchor{100, 10, 10, 0, 0}));
  EXPECT_EQ(init_anchor(21), (Anchor{21, 4, 5, 1, 1}));
  EXPECT_EQ(init_anchor(8), (Anchor{8, 2, 4, 0, 2}));
  EXPECT_EQ(init_anchor(1), (Anchor{1, 1, 1, 0, 0}));
}

TEST(InitAnchor, RejectsZero) { EXPECT_THROW(init_anchor(0), out_of_domain); }

TEST(InitAnchor, InvariantsHold) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100000; ++i) {
    const u64 n = i < 50000 ? static_cast<u64>(i + 1) : std::max<u64>(1, rng() >> (rng() % 64));
    const Anchor a = init_anchor(n);
    ASSERT_LE(static_cast<u128>(a.x0) * a.x0, n);
    ASSERT_GT((static_cast<u128>(a.x0) + 1) * (a.x0 + 1), n);
    ASSERT_EQ(static_cast<u128>(a.x0) * a.y0 + a.r0, n);
    ASSERT_LT(a.r0, a.x0);
    ASSERT_LE(a.x0, a.y0);
    ASSERT_EQ(a.delta, a.y0 - a.x0);
    ASSERT_LE(a.delta, 2u);
  }
}

TEST(Rprime, Examples) {
  EXPECT_EQ(rprime(init_anchor(21), 0), 1u);
  EXPECT_EQ(rprime(init_anchor(21), 2), 7u);
  EXPECT_EQ(rprime(init_anchor(100), 3), 9u);
  EXPECT_EQ(rprime(init_anchor(21), 16), 273u);
}

TEST(Rprime, ClosedFormIdentityAndDifferences) {
  for (u64 n = 1; n <= 1500; ++n) {
    const Anchor a = init_anchor(n);
    for (u64 k = 0; k <= n; ++k) {
      const u128 rp = rprime(a, k);
      ASSERT_EQ(static_cast<i128>(rp), ref_rprime(a, k)) << n << ' ' << k;
      // (k-1)k/2 + (k+1)k/2 telescopes to k^2.
      const u128 tri = (k == 0 ? 0 : static_cast<u128>(k - 1) * k / 2) + static_cast<u128>(k + 1) * k / 2;
      ASSERT_EQ(rp - a.r0 - static_cast<u128>(k) * a.delta, tri);
      ASSERT_EQ(rprime(a, k + 1) - rp, static_cast<u128>(2 * k + 1 + a.delta));
    }
  }
}

TEST(XGenerator, Examples) {
  const Anchor a21 = init_anchor(21);
  EXPECT_EQ(x_residual(a21, 1), (DivisorResidual{3, 0}));
  EXPECT_EQ(x_residual(a21, 2), (DivisorResidual{2, 1}));
  EXPECT_EQ(x_residual(init_anchor(100), 3), (DivisorResidual{7, 2}));
  EXPECT_EQ(x_quotient(a21, 1), 7u);
  EXPECT_EQ(x_quotient(init_anchor(100), 3), 14u);
  EXPECT_EQ(x_quotient(init_anchor(8), 1), 8u);
}

TEST(XGenerator, OutOfDomain) {
  const Anchor a = init_anchor(21);
  EXPECT_THROW(x_residual(a, 4), out_of_domain);
  EXPECT_THROW(x_quotient(a, 4), out_of_domain);
  EXPECT_NO_THROW(x_residual(a, 3));
}

TEST(YGenerator, Examples) {
  const Anchor a = init_anchor(21);
  EXPECT_EQ(y_residual(a, 1), (DivisorResidual{6, 3}));
  EXPECT_EQ(y_residual(a, 2), (DivisorResidual{7, 0}));
  EXPECT_EQ(y_residual(a, 3), (DivisorResidual{8, 5}));
  EXPECT_EQ(y_quotient(a, 2), 3u);
  EXPECT_EQ(y_quotient(a, 3), 2u);
  // x0 - k = -12 here.
  EXPECT_EQ(y_quotient(a, 16), 1u);
}

TEST(YGenerator, OutOfDomain) {
  const Anchor a = init_anchor(21);
  EXPECT_NO_THROW(y_residual(a, 16));
  EXPECT_THROW(y_residual(a, 17), out_of_domain);
  EXPECT_THROW(y_quotient(a, 17), out_of_domain);
}

TEST(XWalk, StepExamples) {
  const Anchor a = init_anchor(21);
  WalkState s = x_state(a, 0);
  EXPECT_EQ(s.divisor, 4u);
  EXPECT_EQ(s.quotient, 5u);
  EXPECT_EQ(s.residual, 1u);

  s = x_walk_step(s);
  EXPECT_EQ(s.k, 1u);
  EXPECT_EQ(s.divisor, 3u);
  EXPECT_EQ(s.quotient, 7u);
  EXPECT_EQ(s.residual, 0u);

  s = x_walk_step(s);
  EXPECT_EQ(s.divisor, 2u);
  EXPECT_EQ(s.quotient, 10u);
  EXPECT_EQ(s.residual, 1u);

  s = x_walk_step(s);
  EXPECT_EQ(s.divisor, 1u);
  EXPECT_EQ(s.quotient, 21u);
  EXPECT_EQ(s.residual, 0u);
  EXPECT_EQ(s.rprime, rprime(a, 3));

  EXPECT_THROW(x_walk_step(s), end_of_walk);
}

TEST(YWalk, StepExamples) {
  const Anchor a = init_anchor(21);
  WalkState s = y_state(a, 0);
  EXPECT_EQ(s.divisor, 5u);
  EXPECT_EQ(s.quotient, 4u);
  EXPECT_EQ(s.residual, 1u);

  s = y_walk_step(s);
  EXPECT_EQ(s.divisor, 6u);
  EXPECT_EQ(s.quotient, 3u);
  EXPECT_EQ(s.residual, 3u);

  s = y_walk_step(s);
  EXPECT_EQ(s.divisor, 7u);
  EXPECT_EQ(s.quotient, 3u);
  EXPECT_EQ(s.residual, 0u);

  s = y_walk_step(s);
  EXPECT_EQ(s.divisor, 8u);
  EXPECT_EQ(s.quotient, 2u);
  EXPECT_EQ(s.residual, 5u);

  EXPECT_THROW(y_walk_step(y_state(a, 16)), end_of_walk);
}

TEST(Walk, DirectionMismatchRejected) {
  const Anchor a = init_anchor(21);
  EXPECT_THROW(x_walk_step(y_state(a, 0)), std::invalid_argument);
  EXPECT_THROW(y_walk_step(x_state(a, 0)), std::invalid_argument);
}

TEST(Walk, DegenerateOne) {
  const Anchor a = init_anchor(1);
  EXPECT_EQ(x_last_k(a), 0u);
  EXPECT_EQ(y_last_k(a), 0u);
  EXPECT_EQ(x_residual(a, 0), (DivisorResidual{1, 0}));
  EXPECT_EQ(y_quotient(a, 0), 1u);
  EXPECT_THROW(x_walk_step(x_state(a, 0)), end_of_walk);
  EXPECT_THROW(y_walk_step(y_state(a, 0)), end_of_walk);
}

// Stepping from the anchor reproduces the closed form and native division at
// every k, on both walks, and ends at (1, n, 0) / (n, 1, 0).
TEST(Walk, RecurrenceMatchesClosedFormAndDivision) {
  for (u64 n = 1; n <= 1200; ++n) {
    const Anchor a = init_anchor(n);

    WalkState x = x_state(a, 0);
    for (u64 k = 0;; ++k) {
      ASSERT_EQ(x, x_state(a, k)) << n << ' ' << k;
      ASSERT_EQ(x.divisor, a.x0 - k);
      ASSERT_EQ(x.residual, n % x.divisor);
      ASSERT_EQ(x.quotient, n / x.divisor);
      ASSERT_EQ(x.rprime % x.divisor, x.residual);
      if (k == x_last_k(a)) break;
      x = x_walk_step(x);
    }
    EXPECT_EQ(x.divisor, 1u);
    EXPECT_EQ(x.quotient, n);
    EXPECT_EQ(x.residual, 0u);

    WalkState y = y_state(a, 0);
    for (u64 k = 0;; ++k) {
      ASSERT_EQ(y, y_state(a, k)) << n << ' ' << k;
      ASSERT_EQ(y.divisor, a.y0 + k);
      ASSERT_EQ(y.residual, n % y.divisor);
      ASSERT_EQ(y.quotient, n / y.divisor);
      ASSERT_EQ(y.rprime % y.divisor, y.residual);
      if (k == y_last_k(a)) break;
      y = y_walk_step(y);
    }
    EXPECT_EQ(y.divisor, n);
    EXPECT_EQ(y.quotient, 1u);
    EXPECT_EQ(y.residual, 0u);
  }
}

TEST(Walk, LargeDividends) {
  std::mt19937_64 rng(17);
  std::vector<u64> ns{std::numeric_limits<u64>::max(), (u64{1} << 63) - 1, u64{1} << 63,
                      u64{4294967295} * 4294967295u, u64{4294967295} * 4294967295u - 1};
  for (int i = 0; i < 200; ++i) ns.push_back(rng() | 1);

  for (u64 n : ns) {
    const Anchor a = init_anchor(n);
    // X side: a run of steps from each end and from the middle.
    for (u64 start : {u64{0}, a.x0 / 2, x_last_k(a) - 50}) {
      WalkState s = x_state(a, start);
      for (int i = 0; i < 50; ++i) {
        ASSERT_EQ(s.residual, n % s.divisor);
        ASSERT_EQ(s.quotient, n / s.divisor);
        s = x_walk_step(s);
        ASSERT_EQ(s, x_state(a, s.k));
      }
    }
    // Y side: around x0 (where x0 - k changes sign) and the far end.
    for (u64 start : {u64{0}, a.x0 - 10, x_last_k(a) * 3, y_last_k(a) - 40}) {
      WalkState s = y_state(a, start);
      for (int i = 0; i < 40; ++i) {
        ASSERT_EQ(s.residual, n % s.divisor);
        ASSERT_EQ(s.quotient, n / s.divisor);
        ASSERT_EQ(s.rprime, ref_rprime_wide(a, s.k)) << n;
        s = y_walk_step(s);
        ASSERT_EQ(s, y_state(a, s.k));
      }
    }
    const WalkState end = y_state(a, y_last_k(a));
    EXPECT_EQ(end.divisor, n);
    EXPECT_EQ(end.quotient, 1u);
    EXPECT_EQ(end.residual, 0u);
  }
}

}  // namespace
}  // namespace dgen
