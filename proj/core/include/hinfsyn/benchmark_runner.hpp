#pragma once

#include <filesystem>
#include <vector>

#include "hinfsyn/optimizer.hpp"
#include "hinfsyn/report.hpp"

namespace hinfsyn {

struct BenchmarkOptions {
  SynthesisConfig config;
  int jobs = 1;  // worker threads; each system runs on exactly one
  // When set, the config value wins over a per-file override. The CLI sets
  // these for flags the user passed explicitly.
  bool alpha0_pinned = false;
  bool eps_pinned = false;
};

// Loads each system file, synthesizes a controller, and collects one
// ReportRow per input in the same order as `systems`. A failure in one
// system (bad file, infeasible plant, solver breakdown) is recorded as an
// error row and does not abort the remaining runs.
std::vector<ReportRow> run_benchmark(
    const std::vector<std::filesystem::path>& systems,
    const BenchmarkOptions& options);

}  // namespace hinfsyn
