#include "hinfsyn/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hinfsyn {

namespace {

// %.17g keeps every double distinguishable on round trip while staying
// compact for values that need fewer digits.
std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string("x");
}

std::string format_human(const std::optional<double>& value) {
  if (!value) {
    return "x";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", *value);
  return buf;
}

}  // namespace

std::string emit_report(const std::vector<ReportRow>& rows,
                        ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    out << "system,n,m,gamma0,gamma_star,time_seconds,improvement_pct,"
           "termination\n";
    for (const ReportRow& row : rows) {
      out << row.system << ',' << row.n << ',' << row.m << ','
          << format_optional(row.gamma0) << ','
          << format_optional(row.gamma_star) << ','
          << format_double(row.time_seconds) << ','
          << format_optional(row.improvement_pct) << ',' << row.termination
          << '\n';
    }
    return out.str();
  }

  // Human table: fixed columns sized to the widest entry.
  const char* headers[] = {"system",       "n",      "m",
                           "gamma0",       "gamma*", "time [s]",
                           "improve [%]",  "termination"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const ReportRow& row : rows) {
    char time_buf[64];
    std::snprintf(time_buf, sizeof(time_buf), "%.3f", row.time_seconds);
    cells.push_back({row.system, std::to_string(row.n), std::to_string(row.m),
                     format_human(row.gamma0), format_human(row.gamma_star),
                     time_buf, format_human(row.improvement_pct),
                     row.termination});
  }
  const std::size_t ncols = std::size(headers);
  std::vector<std::size_t> widths(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    widths[c] = std::string(headers[c]).size();
    for (const auto& row : cells) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < ncols; ++c) {
      out << row[c] << std::string(widths[c] - row[c].size(), ' ');
      out << (c + 1 < ncols ? "  " : "\n");
    }
  };
  std::vector<std::string> header_row(headers, headers + ncols);
  emit_row(header_row);
  for (std::size_t c = 0; c < ncols; ++c) {
    out << std::string(widths[c], '-') << (c + 1 < ncols ? "  " : "\n");
  }
  for (const auto& row : cells) {
    emit_row(row);
  }
  return out.str();
}

}  // namespace hinfsyn
