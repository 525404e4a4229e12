#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgen/core_walk.hpp"
#include "dgen/divisor_scan.hpp"

namespace dgen {

enum class VerifyMode { Closed, Recurrence, Both };

const char* mode_name(VerifyMode m);  // "closed" / "recurrence" / "both"
std::optional<VerifyMode> parse_mode(const std::string& s);

struct DivMod {
  u64 quotient = 0;
  u64 residual = 0;

  friend bool operator==(const DivMod&, const DivMod&) = default;
};

/// Ground truth via native division. Shares no code with the generators.
DivMod oracle_divmod(u64 n, u64 d);

/// n - (x0-k)(y0+k), evaluated by multiplication with the sign of x0-k
/// handled explicitly. Independent route to r'(k).
u128 oracle_rprime(const Anchor& a, u64 k);

struct VerifyFailure {
  Side side = Side::XWalk;
  u64 k = 0;
  std::string property;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  u64 n = 0;
  u64 checks_run = 0;
  bool passed = true;
  std::optional<VerifyFailure> first_failure;
};

struct RangeSummary {
  u64 n_min = 0;
  u64 n_max = 0;
  u64 total_checks = 0;
  std::vector<VerifyReport> failures;
};

// Per-side sweeps are exhaustive up to these n; above them k is sampled in
// windows of `window` consecutive steps at k = 0, each power of two, and the
// end of the walk.
struct VerifyLimits {
  u64 x_exhaustive_max = 20000;
  u64 y_exhaustive_max = 2000;
  u64 window = 64;
  bool check_x = true;
  bool check_y = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

VerifyReport verify_n(u64 n, VerifyMode mode, const VerifyLimits& limits = {});

/// Results are identical for any thread count; failures are listed in
/// ascending n.
RangeSummary verify_range(u64 n_min, u64 n_max, VerifyMode mode, const VerifyLimits& limits = {});

std::string to_json(const VerifyReport& r);
std::string to_json(const RangeSummary& s);
std::string to_text(const VerifyReport& r);
std::string to_text(const RangeSummary& s, VerifyMode mode);

}  // namespace dgen
