#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wilsonlab/closedform.hpp"
#include "wilsonlab/errors.hpp"
#include "wilsonlab/matrix.hpp"
#include "wilsonlab/modmath.hpp"
#include "wilsonlab/oracles.hpp"
#include "wilsonlab/verify.hpp"

namespace wilsonlab::cli {

namespace {

struct EvalArgs {
  std::string kind;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> modulus;
  std::optional<std::uint64_t> base;
  std::string engine = "oracle";
};

struct ScanArgs {
  std::uint64_t from = 2;
  std::uint64_t to = 20000;
  std::string kinds = "all";
  std::string out;
  std::string format = "text";
  unsigned workers = 1;
  bool stable = false;
  bool list_kinds = false;
};

struct MatrixArgs {
  std::uint64_t p = 0;
  std::string check = "all";
  std::uint64_t cap = kDefaultMatrixCap;
};

struct StatsArgs {
  std::uint64_t p = 0;
};

std::uint64_t modulus_cap(const Environment& env) {
  if (!env.max_modulus) {
    return kMaxModulus;
  }
  const std::string& text = *env.max_modulus;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 2 || value > kMaxModulus) {
    throw UsageError(fmt::format("WILSONLAB_MAX_MODULUS must be an integer in [2, {}], got '{}'", kMaxModulus, text));
  }
  return value;
}

void require_within_cap(std::uint64_t value, std::uint64_t cap, const char* flag) {
  if (value > cap) {
    throw UsageError(fmt::format("{} {} exceeds the modulus cap {}", flag, value, cap));
  }
}

std::string_view verdict(bool agree) { return agree ? "AGREE" : "MISMATCH"; }

// The (n-1)-indexed quantity for Wilson-style kinds, n itself for sub.
std::uint64_t eval_oracle(const EvalArgs& a, std::uint64_t m) {
  const std::uint64_t prev = a.n - 1;
  if (a.kind == "factorial") {
    return factorial_mod(prev, m);
  }
  if (a.kind == "double") {
    return double_factorial_mod(prev, m);
  }
  if (a.kind == "hyper") {
    return hyperfactorial_mod(prev, m);
  }
  if (a.kind == "super") {
    return superfactorial_mod(prev, m);
  }
  if (a.kind == "sub") {
    return subfactorial_mod(a.n, m);
  }
  if (a.kind == "gauss") {
    return gauss_factorial_mod(prev, a.base.value_or(a.n), m);
  }
  // unit-product
  if (m != a.n) {
    throw DomainError("unit-product is always taken modulo n");
  }
  return unit_product_mod(a.n);
}

std::uint64_t eval_closed(const EvalArgs& a, std::uint64_t m) {
  if (m != a.n) {
    throw DomainError(fmt::format("closed forms are stated modulo n; --modulus {} differs from --n {}", m, a.n));
  }
  if (a.kind == "factorial") {
    return wilson_residue(a.n);
  }
  if (a.kind == "double") {
    return df_closed(a.n);
  }
  if (a.kind == "hyper") {
    return hyper_prime(a.n);
  }
  if (a.kind == "super") {
    return sf_prime(a.n);
  }
  if (a.kind == "sub") {
    return subfactorial_closed(a.n);
  }
  if (a.kind == "gauss" && a.base.value_or(a.n) != a.n) {
    throw DomainError("the closed form of the Gauss factorial needs --base equal to --n");
  }
  return gauss_wilson(a.n);
}

int cmd_eval(const EvalArgs& a, std::uint64_t cap, std::ostream& out) {
  if (a.n == 0) {
    throw UsageError("--n must be positive");
  }
  require_within_cap(a.n, cap, "--n");
  const std::uint64_t m = a.modulus.value_or(a.n);
  if (m == 0) {
    throw UsageError("--modulus must be positive");
  }
  require_within_cap(m, cap, "--modulus");

  if (a.engine == "oracle") {
    out << eval_oracle(a, m) << '\n';
    return kExitOk;
  }
  if (a.engine == "closed") {
    out << eval_closed(a, m) << '\n';
    return kExitOk;
  }
  const std::uint64_t closed = eval_closed(a, m);
  const std::uint64_t oracle = eval_oracle(a, m);
  out << fmt::format("oracle={} closed={} {}\n", oracle, closed, verdict(oracle == closed));
  return oracle == closed ? kExitOk : kExitMismatch;
}

int cmd_scan(const ScanArgs& a, std::uint64_t cap, std::ostream& out, std::ostream& err) {
  if (a.list_kinds) {
    for (const auto id : identity_catalog()) {
      out << identity_name(id) << '\n';
    }
    return kExitOk;
  }
  ScanOptions options;
  options.from = a.from;
  options.to = a.to;
  options.kinds = parse_identity_list(a.kinds);
  options.workers = a.workers;
  options.retain_limit = 0;
  options.max_modulus = cap;
  const ReportFormat format = parse_format(a.format);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out, std::ios::binary);
    if (!file) {
      throw std::ios_base::failure("cannot open output file " + a.out);
    }
    sink = &file;
  }

  // Validate the range before writing any header.
  if (options.from < 2 || options.from > options.to) {
    throw UsageError(fmt::format("invalid scan range [{}, {}]: need 2 <= from <= to", options.from, options.to));
  }

  ReportWriter writer(*sink, format, a.stable);
  writer.begin();
  const ScanReport report = scan_range(options, [&writer](const CheckRecord& rec) { writer.write(rec); });
  writer.finish(report);

  if (format != ReportFormat::text || sink != &out) {
    err << summary_line(report) << '\n';
    if (!a.stable) {
      for (const auto& line : timing_lines(report)) {
        err << line << '\n';
      }
    }
  }
  for (const auto& rec : report.mismatches) {
    err << fmt::format("MISMATCH n={} kind={} oracle={} closed={}\n", rec.n, identity_name(rec.kind), rec.oracle,
                       rec.closed);
  }
  return report.mismatches.empty() ? kExitOk : kExitMismatch;
}

int cmd_matrix(const MatrixArgs& a, std::uint64_t cap, std::ostream& out) {
  if (a.check != "det" && a.check != "diag" && a.check != "giuga" && a.check != "all") {
    throw UsageError("--check must be one of det, diag, giuga, all");
  }
  if (a.p < 2) {
    throw UsageError("--p must be at least 2");
  }
  require_within_cap(a.p, cap, "--p");
  const bool want_det = a.check == "det" || a.check == "all";
  const bool want_diag = a.check == "diag" || a.check == "all";
  const bool want_giuga = a.check == "giuga" || a.check == "all";
  bool all_agree = true;

  if (want_det || want_diag) {
    const PowerMatrix matrix = build_power_matrix(a.p, a.cap);
    const std::uint64_t p = a.p;
    if (want_det) {
      const std::uint64_t det = det_mod_p(matrix);
      const std::uint64_t sf = superfactorial_mod(p - 1, p);
      all_agree &= det == sf;
      out << fmt::format("det={} sf({}) mod {}={} {}\n", det, p - 1, p, sf, verdict(det == sf));
    }
    if (want_diag) {
      const std::uint64_t diag = diagonal_product(matrix);
      const std::uint64_t hyper = hyperfactorial_mod(p - 1, p);
      all_agree &= diag == hyper;
      out << fmt::format("diag={} H({}) mod {}={} {}\n", diag, p - 1, p, hyper, verdict(diag == hyper));
    }
  }
  if (want_giuga) {
    const std::uint64_t sum = giuga_row_sum(a.p);
    const bool prime = is_prime(a.p);
    const bool agree = (sum == a.p - 1) == prime;
    all_agree &= agree;
    out << fmt::format("giuga={} n-1={} prime={} {}\n", sum, a.p - 1, prime ? "yes" : "no", verdict(agree));
  }
  return all_agree ? kExitOk : kExitMismatch;
}

int cmd_stats(const StatsArgs& a, std::uint64_t cap, std::ostream& out) {
  require_within_cap(a.p, cap, "--p");
  const QuadStats stats = quad_stats(a.p);
  const std::uint64_t predicted = df_prime(a.p);
  const std::uint64_t oracle = double_factorial_mod(a.p - 1, a.p);
  std::string line = fmt::format("p={} nu={} N={} mu={}", stats.p, stats.nu, stats.big_n, stats.mu);
  if (stats.i_p) {
    line += fmt::format(" i_p={}", *stats.i_p);
  }
  bool agree = predicted == oracle;
  if (a.p % 4 == 3) {
    const std::uint64_t via_nu = df_prime_3mod4(a.p);
    agree &= via_nu == oracle;
    line += fmt::format(" df_nu={}", via_nu);
  }
  line += fmt::format(" df={} oracle={} {}", predicted, oracle, verdict(agree));
  out << line << '\n';
  return agree ? kExitOk : kExitMismatch;
}

}  // namespace

Environment environment_from_process() {
  Environment env;
  if (const char* cap = std::getenv("WILSONLAB_MAX_MODULUS")) {
    env.max_modulus = cap;
  }
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Wilson-type congruences for the factorial family: oracles, closed forms, scans"};
  app.name("wilsonlab");
  app.require_subcommand(1, 1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate one factorial-family residue");
  eval->add_option("--kind", eval_args.kind, "factorial, double, hyper, super, sub, gauss or unit-product")
      ->required()
      ->check(CLI::IsMember({"factorial", "double", "hyper", "super", "sub", "gauss", "unit-product"}));
  eval->add_option("--n", eval_args.n, "Modulus n; Wilson-style kinds evaluate the (n-1)-indexed value")->required();
  eval->add_option("--modulus", eval_args.modulus, "Reduce modulo this instead of n (oracle engine only)");
  eval->add_option("--base", eval_args.base, "Coprimality base of the Gauss factorial (default n)");
  eval->add_option("--engine", eval_args.engine, "oracle, closed or both")
      ->check(CLI::IsMember({"oracle", "closed", "both"}));

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Cross-check closed forms against oracles over a range");
  scan->add_option("--from", scan_args.from, "First n (>= 2)");
  scan->add_option("--to", scan_args.to, "Last n");
  scan->add_option("--kinds", scan_args.kinds, "Comma-separated identity tags or 'all'");
  scan->add_option("--out", scan_args.out, "Output file (default stdout)");
  scan->add_option("--format", scan_args.format, "jsonl, csv or text")
      ->check(CLI::IsMember({"jsonl", "csv", "text"}));
  scan->add_option("--workers", scan_args.workers, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--stable", scan_args.stable, "Omit timing so output is byte-reproducible");
  scan->add_flag("--list-kinds", scan_args.list_kinds, "Print the identity catalog and exit");

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "Power-matrix determinant, diagonal and Giuga row sum");
  matrix->add_option("--p", matrix_args.p, "Prime p (any n >= 2 for giuga)")->required();
  matrix->add_option("--check", matrix_args.check, "det, diag, giuga or all")
      ->check(CLI::IsMember({"det", "diag", "giuga", "all"}));
  matrix->add_option("--cap", matrix_args.cap, "Largest p for which the matrix is built");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Quadratic statistics nu, N, mu, i_p of an odd prime");
  stats->add_option("--p", stats_args.p, "Odd prime p")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::uint64_t cap = modulus_cap(env);
    if (eval->parsed()) {
      return cmd_eval(eval_args, cap, out);
    }
    if (scan->parsed()) {
      return cmd_scan(scan_args, cap, out, err);
    }
    if (matrix->parsed()) {
      return cmd_matrix(matrix_args, cap, out);
    }
    return cmd_stats(stats_args, cap, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace wilsonlab::cli
