#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dgen/divisor_scan.hpp"

namespace dgen {

struct ResidualRow {
  u64 k = 0;
  u64 divisor = 0;
  u64 residual = 0;
  u64 quotient = 0;
  u128 rprime = 0;

  friend bool operator==(const ResidualRow&, const ResidualRow&) = default;
};

/// Closed-form rows for k in [from, to]; both bounds must be in-domain.
std::vector<ResidualRow> residual_rows(const Anchor& a, Side side, u64 from, u64 to);

inline constexpr const char* kResidualCsvHeader = "k,divisor,residual,quotient,rprime";

void write_residual_csv(std::ostream& os, const std::vector<ResidualRow>& rows);
void write_residual_json(std::ostream& os, u64 n, Side side, const std::vector<ResidualRow>& rows);
void write_residual_table(std::ostream& os, const std::vector<ResidualRow>& rows);

// Above this n a Y-side command must be given an explicit --to.
inline constexpr u64 kYFullRangeLimit = 1000000;

/// Runs one subcommand (residuals, factor, verify, bench). `args` excludes
/// the program name. Exit codes: 0 success, 1 verification or checksum
/// failure, 2 invalid arguments or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgen
