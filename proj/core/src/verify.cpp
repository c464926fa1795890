#include "wilsonlab/verify.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "wilsonlab/closedform.hpp"
#include "wilsonlab/errors.hpp"
#include "wilsonlab/modmath.hpp"
#include "wilsonlab/oracles.hpp"

namespace wilsonlab {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<Identity, 12> kCatalog{
    Identity::wilson,       Identity::double_factorial, Identity::super_double, Identity::hyper,
    Identity::sub,          Identity::gauss_wilson,     Identity::half_square,  Identity::legendre_form,
    Identity::matrix_det,   Identity::matrix_diag,      Identity::giuga,        Identity::nu_mu_corollary,
};

struct Applicability {
  bool prime;
  bool odd_prime;
};

template <typename F>
std::uint64_t timed(F&& f, std::chrono::nanoseconds& elapsed) {
  const auto start = Clock::now();
  const std::uint64_t value = f();
  elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return value;
}

CheckRecord skipped_record(std::uint64_t n, Identity kind) {
  CheckRecord rec;
  rec.n = n;
  rec.kind = kind;
  rec.modulus = n;
  rec.agree = true;
  rec.skipped = true;
  return rec;
}

template <typename Oracle, typename Closed>
CheckRecord run_check(std::uint64_t n, Identity kind, Oracle&& oracle, Closed&& closed) {
  CheckRecord rec;
  rec.n = n;
  rec.kind = kind;
  rec.modulus = n;
  rec.oracle = timed(oracle, rec.elapsed_oracle);
  rec.closed = timed(closed, rec.elapsed_closed);
  rec.agree = rec.oracle == rec.closed;
  return rec;
}

CheckRecord check_one(std::uint64_t n, Identity kind, const Applicability& app, const VerifyOptions& options) {
  switch (kind) {
    case Identity::wilson:
      return run_check(n, kind, [n] { return factorial_mod(n - 1, n); }, [n] { return wilson_residue(n); });
    case Identity::double_factorial:
      return run_check(n, kind, [n] { return double_factorial_mod(n - 1, n); }, [n] { return df_closed(n); });
    case Identity::super_double:
      if (!app.prime) {
        return skipped_record(n, kind);
      }
      return run_check(n, kind, [n] { return superfactorial_mod(n - 1, n); }, [n] { return sf_prime(n); });
    case Identity::hyper:
      if (!app.odd_prime) {
        return skipped_record(n, kind);
      }
      return run_check(n, kind, [n] { return hyperfactorial_mod(n - 1, n); }, [n] { return hyper_prime(n); });
    case Identity::sub:
      return run_check(n, kind, [n] { return subfactorial_mod(n, n); }, [n] { return subfactorial_closed(n); });
    case Identity::gauss_wilson:
      return run_check(n, kind, [n] { return unit_product_mod(n); }, [n] { return gauss_wilson(n); });
    case Identity::half_square:
      if (!app.odd_prime) {
        return skipped_record(n, kind);
      }
      return run_check(
          n, kind,
          [n] {
            const std::uint64_t half = factorial_mod((n - 1) / 2, n);
            return mod_mul(half, half, n);
          },
          [n] { return sign_residue(half_factorial_square_sign(n), n); });
    case Identity::legendre_form:
      if (!app.odd_prime) {
        return skipped_record(n, kind);
      }
      return run_check(n, kind, [n] { return double_factorial_mod(n - 1, n); }, [n] { return df_via_legendre(n); });
    case Identity::matrix_det:
      if (!app.odd_prime || n > options.matrix_cap) {
        return skipped_record(n, kind);
      }
      return run_check(
          n, kind, [n] { return superfactorial_mod(n - 1, n); },
          [n, &options] { return det_mod_p(build_power_matrix(n, options.matrix_cap)); });
    case Identity::matrix_diag:
      if (!app.odd_prime || n > options.matrix_cap) {
        return skipped_record(n, kind);
      }
      return run_check(
          n, kind, [n] { return hyperfactorial_mod(n - 1, n); },
          [n, &options] { return diagonal_product(build_power_matrix(n, options.matrix_cap)); });
    case Identity::giuga:
      return run_check(
          n, kind, [n] { return std::uint64_t{giuga_row_sum(n) == n - 1}; },
          [&app] { return std::uint64_t{app.prime}; });
    case Identity::nu_mu_corollary:
      if (!app.odd_prime || n % 4 != 3 || n < 7) {
        return skipped_record(n, kind);
      }
      {
        // One stats pass feeds both sides; only the counting is timed.
        QuadStats stats;
        CheckRecord rec = run_check(
            n, kind,
            [n, &stats] {
              stats = quad_stats(n);
              return sign_residue((stats.nu & 1) ? -1 : 1, n);
            },
            [n, &stats] { return sign_residue((((stats.mu + 1) / 2) & 1) ? -1 : 1, n); });
        return rec;
      }
  }
  throw UsageError("unknown identity");
}

std::vector<CheckRecord> check_range(std::uint64_t first, std::uint64_t last, std::span<const Identity> kinds,
                                     const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  out.reserve(static_cast<std::size_t>((last - first + 1) * kinds.size()));
  for (std::uint64_t n = first; n <= last; ++n) {
    auto recs = verify_single(n, kinds, options);
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

std::vector<Identity> catalog_order(std::vector<Identity> kinds) {
  std::vector<Identity> ordered;
  for (const auto id : kCatalog) {
    if (std::find(kinds.begin(), kinds.end(), id) != kinds.end()) {
      ordered.push_back(id);
    }
  }
  return ordered;
}

double ratio(std::chrono::nanoseconds num, std::chrono::nanoseconds den) {
  if (den.count() <= 0) {
    return 0.0;
  }
  return static_cast<double>(num.count()) / static_cast<double>(den.count());
}

}  // namespace

std::span<const Identity> identity_catalog() noexcept { return kCatalog; }

std::string_view identity_name(Identity id) noexcept {
  switch (id) {
    case Identity::wilson:
      return "wilson";
    case Identity::double_factorial:
      return "double";
    case Identity::super_double:
      return "super-double";
    case Identity::hyper:
      return "hyper";
    case Identity::sub:
      return "sub";
    case Identity::gauss_wilson:
      return "gauss-wilson";
    case Identity::half_square:
      return "half-square";
    case Identity::legendre_form:
      return "legendre-form";
    case Identity::matrix_det:
      return "matrix-det";
    case Identity::matrix_diag:
      return "matrix-diag";
    case Identity::giuga:
      return "giuga";
    case Identity::nu_mu_corollary:
      return "nu-mu-corollary";
  }
  return "?";
}

Identity parse_identity(std::string_view tag) {
  for (const auto id : kCatalog) {
    if (identity_name(id) == tag) {
      return id;
    }
  }
  if (tag == "super≡double") {
    return Identity::super_double;
  }
  throw UsageError("unknown identity tag '" + std::string(tag) + "'");
}

std::vector<Identity> parse_identity_list(std::string_view list) {
  if (list == "all") {
    return {kCatalog.begin(), kCatalog.end()};
  }
  std::vector<Identity> kinds;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto tag = list.substr(0, comma);
    if (tag == "all") {
      return {kCatalog.begin(), kCatalog.end()};
    }
    if (!tag.empty()) {
      kinds.push_back(parse_identity(tag));
    }
    if (comma == std::string_view::npos) {
      break;
    }
    list.remove_prefix(comma + 1);
  }
  if (kinds.empty()) {
    throw UsageError("no identity tags given");
  }
  return catalog_order(std::move(kinds));
}

std::vector<CheckRecord> verify_single(std::uint64_t n, std::span<const Identity> kinds,
                                       const VerifyOptions& options) {
  if (n < 2) {
    throw UsageError("verify_single: n must be at least 2");
  }
  if (n > kMaxModulus) {
    throw UsageError("verify_single: n exceeds kMaxModulus");
  }
  const auto cls = classify(n);
  const Applicability app{cls.is_prime(), cls.tag == PrimeTag::odd_prime};
  std::vector<CheckRecord> out;
  out.reserve(kinds.size());
  for (const auto kind : kinds) {
    out.push_back(check_one(n, kind, app, options));
  }
  return out;
}

double KindTiming::speedup() const noexcept { return ratio(oracle, closed); }

double KindTiming::even_speedup() const noexcept { return ratio(even_oracle, even_closed); }

ScanReport scan_range(const ScanOptions& options, const RecordSink& sink) {
  const std::uint64_t cap = options.max_modulus == 0 ? kMaxModulus : std::min(options.max_modulus, kMaxModulus);
  if (options.from < 2 || options.from > options.to) {
    throw UsageError("invalid scan range [" + std::to_string(options.from) + ", " + std::to_string(options.to) +
                     "]: need 2 <= from <= to");
  }
  if (options.to > cap) {
    throw UsageError("scan range end " + std::to_string(options.to) + " exceeds the modulus cap " +
                     std::to_string(cap));
  }
  if (options.kinds.empty()) {
    throw UsageError("scan needs at least one identity");
  }
  if (options.workers == 0) {
    throw UsageError("worker count must be positive");
  }

  const auto start = Clock::now();
  ScanReport report;
  report.from = options.from;
  report.to = options.to;
  report.kinds = catalog_order(options.kinds);
  for (const auto kind : report.kinds) {
    report.timing.push_back(KindTiming{kind});
  }
  const std::uint64_t span_size = options.to - options.from + 1;
  report.records_retained = span_size <= options.retain_limit / report.kinds.size();

  auto absorb = [&](const CheckRecord& rec) {
    ++report.total;
    if (rec.skipped) {
      ++report.skipped;
    } else if (rec.agree) {
      ++report.agreed;
    } else {
      report.mismatches.push_back(rec);
    }
    if (!rec.skipped) {
      const auto slot = static_cast<std::size_t>(
          std::find(report.kinds.begin(), report.kinds.end(), rec.kind) - report.kinds.begin());
      auto& t = report.timing[slot];
      ++t.samples;
      t.oracle += rec.elapsed_oracle;
      t.closed += rec.elapsed_closed;
      if (rec.n % 2 == 0) {
        ++t.even_samples;
        t.even_oracle += rec.elapsed_oracle;
        t.even_closed += rec.elapsed_closed;
      }
    }
    if (report.records_retained) {
      report.records.push_back(rec);
    }
    if (sink) {
      sink(rec);
    }
  };

  const std::uint64_t batch = std::max<std::uint64_t>(options.batch_size, 1);
  for (std::uint64_t lo = options.from;; lo += batch) {
    const std::uint64_t hi = (options.to - lo < batch) ? options.to : lo + batch - 1;
    const std::uint64_t count = hi - lo + 1;
    const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(options.workers, count));

    if (workers <= 1) {
      for (const auto& rec : check_range(lo, hi, report.kinds, options.verify)) {
        absorb(rec);
      }
    } else {
      std::vector<std::vector<CheckRecord>> parts(workers);
      std::vector<std::exception_ptr> errors(workers);
      {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = (count + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
          const std::uint64_t first = lo + w * chunk;
          if (first > hi) {
            break;
          }
          const std::uint64_t last = std::min(hi, first + chunk - 1);
          pool.emplace_back([&, w, first, last] {
            try {
              parts[w] = check_range(first, last, report.kinds, options.verify);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
      }
      for (const auto& err : errors) {
        if (err) {
          std::rethrow_exception(err);
        }
      }
      for (const auto& part : parts) {
        for (const auto& rec : part) {
          absorb(rec);
        }
      }
    }
    if (hi == options.to) {
      break;
    }
  }

  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

}  // namespace wilsonlab
