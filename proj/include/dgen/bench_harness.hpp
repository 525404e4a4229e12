#pragma once

#include <chrono>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgen/divisor_scan.hpp"

namespace dgen {

enum class BenchMethod { GeneratorStream, NaiveDivision };

const char* method_name(BenchMethod m);  // "generator_stream" / "naive_division"

struct BenchReport {
  u64 n = 0;
  Side side = Side::XWalk;
  BenchMethod method = BenchMethod::GeneratorStream;
  u64 steps = 0;
  std::chrono::nanoseconds wall_time{0};
  double ns_per_step = 0.0;
  u128 checksum = 0;  // sum of every residual produced
};

class checksum_mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Residual sums over the whole walk. The generator stream keeps r' by
// adding its second difference and reduces once per step; the naive loop
// divides n by every divisor.
u128 stream_generator_residuals(const Anchor& a, Side side);
u128 stream_naive_residuals(const Anchor& a, Side side);

/// One report per method per repetition (generator first). Throws
/// checksum_mismatch if the methods disagree, out_of_domain for n < 2 or
/// repetitions == 0.
std::vector<BenchReport> bench_compare(u64 n, Side side, unsigned repetitions);

inline constexpr const char* kBenchCsvHeader = "n,side,method,steps,wall_time_ns,ns_per_step,checksum";

std::string to_csv_row(const BenchReport& r);
void write_csv(std::ostream& os, const std::vector<BenchReport>& reports);

}  // namespace dgen
