#include "dgen/bench_harness.hpp"

#include <charconv>
#include <ostream>

namespace dgen {

namespace {

// Keep the optimizer from hoisting or folding the measured loops.
template <typename T>
inline void clobber(T& v) {
  asm volatile("" : "+m"(v) : : "memory");
}

template <typename Rprime>
u128 generator_x(const Anchor& a) {
  // r' <= n on the X walk.
  Rprime rp = a.r0;
  u128 sum = 0;
  for (u64 k = 0; k < a.x0; ++k) {
    sum += static_cast<u64>(rp % (a.x0 - k));
    rp += 2 * static_cast<Rprime>(k) + 1 + a.delta;
  }
  return sum;
}

template <typename Rprime>
u128 generator_y(const Anchor& a) {
  Rprime rp = a.r0;
  u128 sum = 0;
  const u64 last = y_last_k(a);
  for (u64 k = 0;; ++k) {
    sum += static_cast<u64>(rp % (a.y0 + k));
    if (k == last) break;
    rp += 2 * static_cast<Rprime>(k) + 1 + a.delta;
  }
  return sum;
}

u64 walk_steps(const Anchor& a, Side side) {
  return side == Side::XWalk ? a.x0 : y_last_k(a) + 1;
}

}  // namespace

const char* method_name(BenchMethod m) {
  return m == BenchMethod::GeneratorStream ? "generator_stream" : "naive_division";
}

u128 stream_generator_residuals(const Anchor& a, Side side) {
  if (side == Side::XWalk) return generator_x<u64>(a);
  // r' <= n + n^2, which fits 64 bits while n < 2^32.
  if (a.n <= 0xFFFFFFFFull) return generator_y<u64>(a);
  return generator_y<u128>(a);
}

u128 stream_naive_residuals(const Anchor& a, Side side) {
  u128 sum = 0;
  if (side == Side::XWalk) {
    for (u64 d = a.x0; d >= 1; --d) sum += a.n % d;
  } else {
    for (u64 d = a.y0;; ++d) {
      sum += a.n % d;
      if (d == a.n) break;
    }
  }
  return sum;
}

std::vector<BenchReport> bench_compare(u64 n, Side side, unsigned repetitions) {
  if (n < 2) throw out_of_domain("bench requires n >= 2");
  if (repetitions == 0) throw out_of_domain("bench requires at least one repetition");

  const Anchor a = init_anchor(n);
  const u64 steps = walk_steps(a, side);

  auto measure = [&](BenchMethod method) {
    Anchor input = a;
    clobber(input);
    const auto start = std::chrono::steady_clock::now();
    u128 sum = method == BenchMethod::GeneratorStream ? stream_generator_residuals(input, side)
                                                      : stream_naive_residuals(input, side);
    clobber(sum);
    const auto stop = std::chrono::steady_clock::now();

    BenchReport r;
    r.n = n;
    r.side = side;
    r.method = method;
    r.steps = steps;
    r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
    r.ns_per_step = static_cast<double>(r.wall_time.count()) / static_cast<double>(steps);
    r.checksum = sum;
    return r;
  };

  std::vector<BenchReport> reports;
  reports.reserve(2 * static_cast<size_t>(repetitions));
  for (unsigned rep = 0; rep < repetitions; ++rep) {
    reports.push_back(measure(BenchMethod::GeneratorStream));
    reports.push_back(measure(BenchMethod::NaiveDivision));
    if (reports.back().checksum != reports[reports.size() - 2].checksum) {
      throw checksum_mismatch("residual checksums differ for n=" + std::to_string(n) + " side=" +
                              side_name(side) + ": generator " + to_string(reports[reports.size() - 2].checksum) +
                              ", naive " + to_string(reports.back().checksum));
    }
  }
  return reports;
}

std::string to_csv_row(const BenchReport& r) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), r.ns_per_step);
  std::string ns(buf, ec == std::errc{} ? end : buf);

  std::string row;
  row += std::to_string(r.n);
  row += ',';
  row += side_name(r.side);
  row += ',';
  row += method_name(r.method);
  row += ',';
  row += std::to_string(r.steps);
  row += ',';
  row += std::to_string(r.wall_time.count());
  row += ',';
  row += ns;
  row += ',';
  row += to_string(r.checksum);
  return row;
}

void write_csv(std::ostream& os, const std::vector<BenchReport>& reports) {
  os << kBenchCsvHeader << '\n';
  for (const auto& r : reports) os << to_csv_row(r) << '\n';
}

}  // namespace dgen
