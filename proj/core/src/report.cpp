#include <fmt/format.h>

#include <ios>
#include <ostream>
#include <string>

#include "wilsonlab/errors.hpp"
#include "wilsonlab/verify.hpp"

namespace wilsonlab {

namespace {

// RFC 4180: quote fields containing a separator, quote or line break.
std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string_view status_of(const CheckRecord& rec) {
  if (rec.skipped) {
    return "skip";
  }
  return rec.agree ? "ok" : "MISMATCH";
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "jsonl") {
    return ReportFormat::jsonl;
  }
  if (name == "csv") {
    return ReportFormat::csv;
  }
  if (name == "text") {
    return ReportFormat::text;
  }
  throw UsageError("unknown report format '" + std::string(name) + "' (expected jsonl, csv or text)");
}

ReportWriter::ReportWriter(std::ostream& out, ReportFormat format, bool stable)
    : out_(out), format_(format), stable_(stable) {}

void ReportWriter::check_stream() {
  if (!out_) {
    throw std::ios_base::failure("report sink write failed");
  }
}

void ReportWriter::begin() {
  switch (format_) {
    case ReportFormat::jsonl:
      break;
    case ReportFormat::csv:
      out_ << "n,kind,modulus,oracle,closed,agree,skipped";
      if (!stable_) {
        out_ << ",oracle_ns,closed_ns";
      }
      out_ << "\r\n";
      break;
    case ReportFormat::text:
      out_ << fmt::format("{:<8} {:>12} {:<16} {:>12} {:>12} {:>12}\n", "status", "n", "kind", "modulus", "oracle",
                          "closed");
      break;
  }
  check_stream();
}

void ReportWriter::write(const CheckRecord& rec) {
  const auto kind = identity_name(rec.kind);
  switch (format_) {
    case ReportFormat::jsonl:
      out_ << fmt::format(R"({{"n":{},"kind":"{}","modulus":{},"oracle":{},"closed":{},"agree":{},"skipped":{})",
                          rec.n, kind, rec.modulus, rec.oracle, rec.closed, rec.agree, rec.skipped);
      if (!stable_) {
        out_ << fmt::format(R"(,"oracle_ns":{},"closed_ns":{})", rec.elapsed_oracle.count(),
                            rec.elapsed_closed.count());
      }
      out_ << "}\n";
      break;
    case ReportFormat::csv:
      out_ << fmt::format("{},{},{},{},{},{},{}", rec.n, csv_field(kind), rec.modulus, rec.oracle, rec.closed,
                          rec.agree, rec.skipped);
      if (!stable_) {
        out_ << fmt::format(",{},{}", rec.elapsed_oracle.count(), rec.elapsed_closed.count());
      }
      out_ << "\r\n";
      break;
    case ReportFormat::text:
      out_ << fmt::format("{:<8} {:>12} {:<16} {:>12} {:>12} {:>12}\n", status_of(rec), rec.n, kind, rec.modulus,
                          rec.oracle, rec.closed);
      break;
  }
  check_stream();
}

void ReportWriter::finish(const ScanReport& report) {
  if (format_ == ReportFormat::text) {
    out_ << summary_line(report) << '\n';
    if (!stable_) {
      for (const auto& line : timing_lines(report)) {
        out_ << line << '\n';
      }
    }
  }
  out_.flush();
  check_stream();
}

void emit_report(const ScanReport& report, ReportFormat format, std::ostream& out, bool stable) {
  if (!report.records_retained) {
    throw UsageError("report records were streamed, not retained; emit through a ReportWriter sink");
  }
  ReportWriter writer(out, format, stable);
  writer.begin();
  for (const auto& rec : report.records) {
    writer.write(rec);
  }
  writer.finish(report);
}

std::string summary_line(const ScanReport& report) {
  return fmt::format("checked={} agree={} skipped={} mismatch={}", report.total, report.agreed, report.skipped,
                     report.mismatches.size());
}

std::vector<std::string> timing_lines(const ScanReport& report) {
  std::vector<std::string> lines;
  for (const auto& t : report.timing) {
    lines.push_back(fmt::format("timing kind={} samples={} oracle_ms={:.3f} closed_ms={:.3f} speedup={:.1f}x "
                                "even_samples={} even_speedup={:.1f}x",
                                identity_name(t.kind), t.samples, t.oracle.count() / 1e6, t.closed.count() / 1e6,
                                t.speedup(), t.even_samples, t.even_speedup()));
  }
  lines.push_back(fmt::format("wall_ms={:.3f}", report.wall_time.count() / 1e6));
  return lines;
}

}  // namespace wilsonlab
