#include "dgen/cli.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "dgen/bench_harness.hpp"
#include "dgen/oracle_verify.hpp"

namespace dgen {

std::vector<ResidualRow> residual_rows(const Anchor& a, Side side, u64 from, u64 to) {
  std::vector<ResidualRow> rows;
  if (from > to) return rows;
  rows.reserve(static_cast<size_t>(std::min<u64>(to - from + 1, 1u << 20)));
  for (u64 k = from;; ++k) {
    const WalkState s = side == Side::XWalk ? x_state(a, k) : y_state(a, k);
    rows.push_back({k, s.divisor, s.residual, s.quotient, s.rprime});
    if (k == to) break;
  }
  return rows;
}

void write_residual_csv(std::ostream& os, const std::vector<ResidualRow>& rows) {
  os << kResidualCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.k << ',' << r.divisor << ',' << r.residual << ',' << r.quotient << ',' << to_string(r.rprime)
       << '\n';
  }
}

// Hand-written so r' is emitted as an exact integer literal at any width.
void write_residual_json(std::ostream& os, u64 n, Side side, const std::vector<ResidualRow>& rows) {
  os << "{\"n\":" << n << ",\"side\":\"" << side_name(side) << "\",\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) os << ',';
    os << "{\"k\":" << r.k << ",\"divisor\":" << r.divisor << ",\"residual\":" << r.residual
       << ",\"quotient\":" << r.quotient << ",\"rprime\":" << to_string(r.rprime) << '}';
  }
  os << "]}\n";
}

void write_residual_table(std::ostream& os, const std::vector<ResidualRow>& rows) {
  constexpr std::array<const char*, 5> header{"k", "divisor", "residual", "quotient", "rprime"};
  std::vector<std::array<std::string, 5>> cells;
  cells.reserve(rows.size());
  std::array<size_t, 5> width{};
  for (size_t c = 0; c < header.size(); ++c) width[c] = std::char_traits<char>::length(header[c]);
  for (const auto& r : rows) {
    std::array<std::string, 5> line{std::to_string(r.k), std::to_string(r.divisor), std::to_string(r.residual),
                                    std::to_string(r.quotient), to_string(r.rprime)};
    for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    cells.push_back(std::move(line));
  }
  auto emit = [&](auto&& field) {
    for (size_t c = 0; c < width.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << field(c);
    }
    os << '\n';
  };
  emit([&](size_t c) { return header[c]; });
  for (const auto& line : cells) emit([&](size_t c) { return line[c]; });
}

namespace {

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

u64 require_u64(const std::string& flag, const std::string& text) {
  if (auto v = parse_u64(text)) return *v;
  throw usage_error(flag + ": expected a nonnegative decimal integer, got '" + text + "'");
}

u64 require_n(const std::string& text) {
  const u64 n = require_u64("--n", text);
  if (n == 0) throw out_of_domain("--n: n must be >= 1");
  return n;
}

Side to_side(const std::string& s) { return s == "y" ? Side::YWalk : Side::XWalk; }

struct ResidualsArgs {
  std::string n, side, from, to, format = "table";
};

int cmd_residuals(const ResidualsArgs& args, std::ostream& out) {
  const u64 n = require_n(args.n);
  const Side side = to_side(args.side);
  const Anchor a = init_anchor(n);
  const u64 k_max = side == Side::XWalk ? x_last_k(a) : y_last_k(a);

  if (side == Side::YWalk && n > kYFullRangeLimit && args.to.empty()) {
    throw usage_error("--side y with n > " + std::to_string(kYFullRangeLimit) + " requires an explicit --to");
  }
  const u64 from = args.from.empty() ? 0 : require_u64("--from", args.from);
  u64 to = args.to.empty() ? k_max : require_u64("--to", args.to);
  if (from > k_max) {
    throw out_of_domain("--from " + std::to_string(from) + " is past the last step k=" + std::to_string(k_max));
  }
  to = std::min(to, k_max);
  if (from > to) throw usage_error("--from must not exceed --to");

  const auto rows = residual_rows(a, side, from, to);
  if (args.format == "csv") {
    write_residual_csv(out, rows);
  } else if (args.format == "json") {
    write_residual_json(out, n, side, rows);
  } else {
    write_residual_table(out, rows);
  }
  return 0;
}

int cmd_factor(const std::string& n_text, bool first_only, std::ostream& out) {
  const u64 n = require_n(n_text);
  if (first_only) {
    if (auto d = smallest_nontrivial_divisor(n)) {
      out << *d << '\n';
    } else {
      out << "prime\n";
    }
    return 0;
  }
  for (const auto& p : scan_divisor_pairs(init_anchor(n))) out << p.small << " x " << p.large << '\n';
  return 0;
}

int cmd_verify(const std::string& min_text, const std::string& max_text, const std::string& mode_text,
               const std::string& format, std::ostream& out) {
  const u64 lo = require_u64("--min", min_text);
  const u64 hi = require_u64("--max", max_text);
  if (lo < 1 || lo > hi) throw usage_error("verify requires 1 <= --min <= --max");
  const VerifyMode mode = *parse_mode(mode_text);

  const RangeSummary s = verify_range(lo, hi, mode);
  if (format == "json") {
    out << to_json(s) << '\n';
  } else {
    out << to_text(s, mode) << '\n';
  }
  return s.failures.empty() ? 0 : 1;
}

int cmd_bench(const std::string& n_text, const std::string& side_text, const std::string& reps_text,
              std::ostream& out) {
  const u64 n = require_n(n_text);
  const Side side = to_side(side_text);
  const u64 reps = require_u64("--reps", reps_text);
  if (reps == 0 || reps > 1000000) throw usage_error("--reps must be in [1, 1000000]");
  if (side == Side::YWalk && n > kYFullRangeLimit) {
    throw usage_error("bench --side y is limited to n <= " + std::to_string(kYFullRangeLimit));
  }
  write_csv(out, bench_compare(n, side, static_cast<unsigned>(reps)));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer residual generators: residual tables, factor pairs, oracle verification, benchmarks",
               "dgen"};
  app.require_subcommand(1);

  ResidualsArgs res;
  auto* residuals = app.add_subcommand("residuals", "Residual/quotient rows along one walk");
  residuals->add_option("--n", res.n, "Dividend")->required();
  residuals->add_option("--side", res.side, "x: divisors x0..1, y: divisors y0..n")
      ->required()
      ->check(CLI::IsMember({"x", "y"}));
  residuals->add_option("--from", res.from, "First step k (default 0)");
  residuals->add_option("--to", res.to, "Last step k, clamped to the walk (default: end of walk)");
  residuals->add_option("--format", res.format)->check(CLI::IsMember({"table", "csv", "json"}));

  std::string factor_n;
  bool first_only = false;
  auto* factor = app.add_subcommand("factor", "Divisor pairs from zeros of the X-walk residual");
  factor->add_option("--n", factor_n, "Dividend")->required();
  factor->add_flag("--first-only", first_only, "Print only the smallest nontrivial divisor, or 'prime'");

  std::string vmin, vmax, vmode = "both", vformat = "text";
  auto* verify = app.add_subcommand("verify", "Cross-check every identity against native division");
  verify->add_option("--min", vmin)->required();
  verify->add_option("--max", vmax)->required();
  verify->add_option("--mode", vmode)->check(CLI::IsMember({"closed", "recurrence", "both"}));
  verify->add_option("--format", vformat)->check(CLI::IsMember({"text", "json"}));

  std::string bn, bside, breps = "1", bformat = "csv";
  auto* bench = app.add_subcommand("bench", "Generator streaming vs naive division throughput");
  bench->add_option("--n", bn, "Dividend")->required();
  bench->add_option("--side", bside)->required()->check(CLI::IsMember({"x", "y"}));
  bench->add_option("--reps", breps);
  bench->add_option("--format", bformat)->check(CLI::IsMember({"csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (residuals->parsed()) return cmd_residuals(res, out);
    if (factor->parsed()) return cmd_factor(factor_n, first_only, out);
    if (verify->parsed()) return cmd_verify(vmin, vmax, vmode, vformat, out);
    if (bench->parsed()) return cmd_bench(bn, bside, breps, out);
  } catch (const checksum_mismatch& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace dgen
