#include "dgen/oracle_verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

namespace dgen {

namespace {

using Window = std::pair<u64, u64>;  // inclusive [lo, hi]

std::string str(u64 v) { return std::to_string(v); }
std::string str(u128 v) { return to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::vector<Window> sample_windows(u64 k_max, bool exhaustive, u64 width) {
  if (exhaustive || k_max < width) return {{0, k_max}};
  std::vector<u64> starts{0};
  for (u64 p = 1; p <= k_max && p != 0; p <<= 1) starts.push_back(p);
  starts.push_back(k_max - width + 1);
  std::sort(starts.begin(), starts.end());

  std::vector<Window> out;
  for (u64 lo : starts) {
    const u64 hi = std::min(k_max, lo + width - 1);
    if (!out.empty() && lo <= out.back().second + 1) {
      out.back().second = std::max(out.back().second, hi);
    } else {
      out.emplace_back(lo, hi);
    }
  }
  return out;
}

class Checker {
 public:
  explicit Checker(u64 n) { report_.n = n; }

  template <typename T>
  void expect(Side side, u64 k, const char* property, const T& expected, const T& actual) {
    ++report_.checks_run;
    if (expected == actual) return;
    report_.passed = false;
    if (!report_.first_failure) {
      report_.first_failure = VerifyFailure{side, k, property, str(expected), str(actual)};
    }
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

struct SideOps {
  Side side;
  u64 (*divisor)(const Anchor&, u64);
  DivisorResidual (*residual)(const Anchor&, u64);
  u64 (*quotient)(const Anchor&, u64);
  bool (*predicate)(const Anchor&, u64);
  WalkState (*closed_state)(const Anchor&, u64);
  WalkState (*step)(const WalkState&);
  u64 k_max;
};

WalkState anchor_state(const Anchor& a, Side side) {
  if (side == Side::XWalk) return {Direction::XDecrement, a, 0, a.x0, a.y0, a.r0, a.r0};
  return {Direction::YIncrement, a, 0, a.y0, a.x0, a.r0, a.r0};
}

// a * x0 == r' + a * k  on X;  a * y0 == r' - a * k  on Y.
void check_witness(Checker& c, const Anchor& a, Side side, u64 k, u64 divisor) {
  const u128 rp = rprime(a, k);
  const u128 m = rp / divisor;
  if (side == Side::XWalk) {
    c.expect(side, k, "corollary_witness", rp + m * k, m * a.x0);
  } else {
    c.expect(side, k, "corollary_witness", rp - m * k, m * a.y0);
  }
}

void verify_side(Checker& c, const Anchor& a, const SideOps& ops, VerifyMode mode, bool exhaustive,
                 u64 width) {
  const bool closed = mode != VerifyMode::Recurrence;
  const bool recurrence = mode != VerifyMode::Closed;

  for (const auto& [lo, hi] : sample_windows(ops.k_max, exhaustive, width)) {
    // The k = 0 window is a pure recurrence from the anchor; later windows
    // are seeded from the closed-form state at their first step.
    WalkState rec = lo == 0 ? anchor_state(a, ops.side) : ops.closed_state(a, lo);

    for (u64 k = lo;; ++k) {
      const u64 divisor = ops.divisor(a, k);
      const DivMod truth = oracle_divmod(a.n, divisor);
      const u128 rp_truth = oracle_rprime(a, k);

      if (closed) {
        const DivisorResidual dr = ops.residual(a, k);
        c.expect(ops.side, k, "closed_divisor", divisor, dr.divisor);
        c.expect(ops.side, k, "closed_residual", truth.residual, dr.residual);
        c.expect(ops.side, k, "closed_quotient", truth.quotient, ops.quotient(a, k));
        c.expect(ops.side, k, "closed_rprime", rp_truth, rprime(a, k));
        c.expect(ops.side, k, "divisor_predicate", truth.residual == 0, ops.predicate(a, k));
        if (truth.residual == 0) check_witness(c, a, ops.side, k, divisor);
        if (k < ops.k_max) {
          const u128 step = static_cast<u128>(2) * k + 1 + a.delta;
          c.expect(ops.side, k, "second_difference", step, rprime(a, k + 1) - rprime(a, k));
        }
      }

      if (recurrence) {
        c.expect(ops.side, k, "recurrence_divisor", divisor, rec.divisor);
        c.expect(ops.side, k, "recurrence_residual", truth.residual, rec.residual);
        c.expect(ops.side, k, "recurrence_quotient", truth.quotient, rec.quotient);
        c.expect(ops.side, k, "recurrence_rprime", rp_truth, rec.rprime);
        c.expect(ops.side, k, "recurrence_rprime_reduces", static_cast<u128>(rec.residual),
                 rec.rprime % rec.divisor);
      }

      if (closed && recurrence) {
        const WalkState cs = ops.closed_state(a, k);
        c.expect(ops.side, k, "recurrence_matches_closed_residual", cs.residual, rec.residual);
        c.expect(ops.side, k, "recurrence_matches_closed_quotient", cs.quotient, rec.quotient);
      }

      if (k == hi) break;
      if (recurrence) rec = ops.step(rec);
    }
  }
}

u64 x_divisor(const Anchor& a, u64 k) { return a.x0 - k; }
u64 y_divisor(const Anchor& a, u64 k) { return a.y0 + k; }

}  // namespace

const char* mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::Closed: return "closed";
    case VerifyMode::Recurrence: return "recurrence";
    case VerifyMode::Both: return "both";
  }
  return "both";
}

std::optional<VerifyMode> parse_mode(const std::string& s) {
  if (s == "closed") return VerifyMode::Closed;
  if (s == "recurrence") return VerifyMode::Recurrence;
  if (s == "both") return VerifyMode::Both;
  return std::nullopt;
}

DivMod oracle_divmod(u64 n, u64 d) {
  if (d == 0) throw std::invalid_argument("oracle_divmod: division by zero");
  return {n / d, n % d};
}

u128 oracle_rprime(const Anchor& a, u64 k) {
  const u128 cofactor = static_cast<u128>(a.y0) + k;
  if (k <= a.x0) return a.n - static_cast<u128>(a.x0 - k) * cofactor;
  return a.n + static_cast<u128>(k - a.x0) * cofactor;
}

VerifyReport verify_n(u64 n, VerifyMode mode, const VerifyLimits& limits) {
  const Anchor a = init_anchor(n);
  Checker c(n);
  if (limits.check_x) {
    const SideOps ops{Side::XWalk, x_divisor,  x_residual, x_quotient,
                      is_divisor_at_x, x_state, x_walk_step, x_last_k(a)};
    verify_side(c, a, ops, mode, n <= limits.x_exhaustive_max, limits.window);
  }
  if (limits.check_y) {
    const SideOps ops{Side::YWalk, y_divisor,  y_residual, y_quotient,
                      is_divisor_at_y, y_state, y_walk_step, y_last_k(a)};
    verify_side(c, a, ops, mode, n <= limits.y_exhaustive_max, limits.window);
  }
  return c.take();
}

RangeSummary verify_range(u64 n_min, u64 n_max, VerifyMode mode, const VerifyLimits& limits) {
  if (n_min < 1 || n_min > n_max) throw out_of_domain("verify range requires 1 <= min <= max");

  constexpr u64 chunk = 64;
  const u64 span = n_max - n_min;  // count - 1, cannot overflow
  const u64 chunks = span / chunk + 1;

  struct ChunkResult {
    u64 checks = 0;
    std::vector<VerifyReport> failures;
  };
  std::vector<ChunkResult> results(chunks);
  std::atomic<u64> next{0};

  auto worker = [&] {
    for (u64 i = next++; i < chunks; i = next++) {
      const u64 lo = n_min + i * chunk;
      const u64 hi = (span - i * chunk < chunk) ? n_max : lo + chunk - 1;
      auto& out = results[i];
      for (u64 n = lo;; ++n) {
        VerifyReport r = verify_n(n, mode, limits);
        out.checks += r.checks_run;
        if (!r.passed) out.failures.push_back(std::move(r));
        if (n == hi) break;
      }
    }
  };

  unsigned threads = limits.threads ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, chunks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  RangeSummary s{n_min, n_max, 0, {}};
  for (auto& r : results) {
    s.total_checks += r.checks;
    for (auto& f : r.failures) s.failures.push_back(std::move(f));
  }
  return s;
}

namespace {

nlohmann::json report_json(const VerifyReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["checks_run"] = r.checks_run;
  j["passed"] = r.passed;
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    j["first_failure"] = {{"side", side_name(f.side)},
                          {"k", f.k},
                          {"property", f.property},
                          {"expected", f.expected},
                          {"actual", f.actual}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

}  // namespace

std::string to_json(const VerifyReport& r) { return report_json(r).dump(); }

std::string to_json(const RangeSummary& s) {
  nlohmann::json j;
  j["n_min"] = s.n_min;
  j["n_max"] = s.n_max;
  j["total_checks"] = s.total_checks;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : s.failures) j["failures"].push_back(report_json(f));
  return j.dump();
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << " checks=" << r.checks_run << (r.passed ? " PASS" : " FAIL");
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    os << " side=" << side_name(f.side) << " k=" << f.k << " property=" << f.property
       << " expected=" << f.expected << " actual=" << f.actual;
  }
  return os.str();
}

std::string to_text(const RangeSummary& s, VerifyMode mode) {
  std::ostringstream os;
  for (const auto& f : s.failures) os << to_text(f) << '\n';
  os << "verify n in [" << s.n_min << ", " << s.n_max << "] mode=" << mode_name(mode) << ": "
     << s.total_checks << " checks, " << s.failures.size() << " failures";
  return os.str();
}

}  // namespace dgen
