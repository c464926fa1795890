#pragma once

/**
 * @file verify.hpp
 * @brief Range scans that pit each closed form against its oracle.
 *
 * Every identity in the catalog produces one CheckRecord per n. Identities
 * whose hypotheses exclude n (prime-only statements at composite n, matrix
 * checks above the size cap) yield a record with skipped = true, so a scan
 * over a range where a statement never applies is visibly vacuous rather
 * than silently green. Skipped records carry oracle = closed = 0.
 *
 * Scan output is a pure function of (from, to, kinds); worker count and
 * batch size only change the timing fields.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wilsonlab/matrix.hpp"

namespace wilsonlab {

enum class Identity {
  wilson,           // (n-1)! vs wilson_residue
  double_factorial, // (n-1)!! vs df_closed
  super_double,     // sf(p-1) vs sf_prime, primes only
  hyper,            // H(p-1) vs hyper_prime, odd primes
  sub,              // !n mod n vs subfactorial_closed
  gauss_wilson,     // unit product vs gauss_wilson
  half_square,      // ((p-1)/2)!^2 vs (-1)^((p+1)/2), odd primes
  legendre_form,    // (p-1)!! vs (2/p) ((p-1)/2)!, odd primes
  matrix_det,       // sf(p-1) vs det(A), odd primes up to the matrix cap
  matrix_diag,      // H(p-1) vs diag(A), odd primes up to the matrix cap
  giuga,            // [row sum = -1] vs [n prime], both as 0/1
  nu_mu_corollary,  // (-1)^nu vs (-1)^((mu+1)/2), primes = 3 mod 4 from 7 on
                    // (false at p = 3, where nu cannot see the nonresidue 2)
};

/// All identities in catalog order.
std::span<const Identity> identity_catalog() noexcept;
std::string_view identity_name(Identity id) noexcept;
/// Throws UsageError for an unknown tag.
Identity parse_identity(std::string_view tag);
/// Comma-separated tags or "all". Duplicates are dropped; result is in
/// catalog order.
std::vector<Identity> parse_identity_list(std::string_view list);

struct CheckRecord {
  std::uint64_t n = 0;
  Identity kind = Identity::wilson;
  std::uint64_t modulus = 0;
  std::uint64_t oracle = 0;
  std::uint64_t closed = 0;
  bool agree = false;
  bool skipped = false;
  std::chrono::nanoseconds elapsed_oracle{0};
  std::chrono::nanoseconds elapsed_closed{0};
};

struct VerifyOptions {
  std::uint64_t matrix_cap = kDefaultMatrixCap;
};

/// One record per requested identity. Throws UsageError for n < 2.
std::vector<CheckRecord> verify_single(std::uint64_t n, std::span<const Identity> kinds,
                                       const VerifyOptions& options = {});

struct KindTiming {
  Identity kind = Identity::wilson;
  std::uint64_t samples = 0;
  std::chrono::nanoseconds oracle{0};
  std::chrono::nanoseconds closed{0};
  std::uint64_t even_samples = 0;
  std::chrono::nanoseconds even_oracle{0};
  std::chrono::nanoseconds even_closed{0};

  /// oracle / closed time over non-skipped records; 0 when nothing ran.
  double speedup() const noexcept;
  double even_speedup() const noexcept;
};

struct ScanOptions {
  std::uint64_t from = 2;
  std::uint64_t to = 2;
  std::vector<Identity> kinds;
  unsigned workers = 1;
  // n-values evaluated per batch before results are merged and emitted.
  std::uint64_t batch_size = 2048;
  // Records are kept in the report only when the scan yields at most this
  // many; above it they only reach the sink.
  std::uint64_t retain_limit = 200000;
  // Scans reject ranges ending above this.
  std::uint64_t max_modulus = 0;  // 0 means kMaxModulus
  VerifyOptions verify;
};

struct ScanReport {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::vector<Identity> kinds;
  std::uint64_t total = 0;
  std::uint64_t agreed = 0;
  std::uint64_t skipped = 0;
  std::vector<CheckRecord> mismatches;
  bool records_retained = false;
  std::vector<CheckRecord> records;
  std::chrono::nanoseconds wall_time{0};
  std::vector<KindTiming> timing;  // one per kind, in kinds order
};

using RecordSink = std::function<void(const CheckRecord&)>;

/// Scans [from, to] with the requested identities, delivering records to
/// sink in (n, catalog) order. Throws UsageError for an invalid range,
/// empty kind list or zero workers.
ScanReport scan_range(const ScanOptions& options, const RecordSink& sink = {});

enum class ReportFormat { jsonl, csv, text };

ReportFormat parse_format(std::string_view name);

/// Streams records in one of the three formats. In stable mode, timing
/// fields and the timing summary are left out so output is byte-identical
/// across runs and worker counts.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format, bool stable);

  void begin();
  void write(const CheckRecord& record);
  /// Text format appends the summary (and timing lines unless stable).
  void finish(const ScanReport& report);

 private:
  void check_stream();

  std::ostream& out_;
  ReportFormat format_;
  bool stable_;
};

/// Writes a report whose records were retained. Throws std::ios_base::failure
/// if the sink goes bad.
void emit_report(const ScanReport& report, ReportFormat format, std::ostream& out, bool stable = true);

/// "checked=<N> agree=<N> skipped=<N> mismatch=<N>"
std::string summary_line(const ScanReport& report);

/// One line per kind with oracle/closed totals and speedup factors.
std::vector<std::string> timing_lines(const ScanReport& report);

}  // namespace wilsonlab
