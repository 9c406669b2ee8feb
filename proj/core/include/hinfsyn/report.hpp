#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace hinfsyn {

// One benchmarked system. Fields left empty when the run failed before
// producing them; termination is either a TerminationReason name or
// "error:<category>" for runs that threw.
struct ReportRow {
  std::string system;
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  std::optional<double> gamma0;
  std::optional<double> gamma_star;
  double time_seconds = 0.0;
  std::optional<double> improvement_pct;  // (gamma0 - gamma_star)/gamma0 * 100
  std::string termination;
};

enum class ReportFormat {
  csv,    // machine-readable, %.17g numbers, missing values rendered as "x"
  human,  // aligned table for the terminal
};

std::string emit_report(const std::vector<ReportRow>& rows,
                        ReportFormat format);

}  // namespace hinfsyn
