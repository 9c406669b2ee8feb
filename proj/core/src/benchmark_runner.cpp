#include "hinfsyn/benchmark_runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "hinfsyn/errors.hpp"
#include "hinfsyn/hinf_norm.hpp"
#include "hinfsyn/system_io.hpp"

namespace hinfsyn {

namespace {

ReportRow run_one(const std::filesystem::path& path,
                  const BenchmarkOptions& options) {
  ReportRow row;
  row.system = path.stem().string();
  try {
    LoadedSystem loaded = load_system(path);
    row.system = loaded.name;
    row.n = loaded.plant.n();
    row.m = loaded.plant.m();

    SynthesisConfig config = options.config;
    if (loaded.overrides.alpha0 && !options.alpha0_pinned) {
      config.alpha0 = *loaded.overrides.alpha0;
    }
    if (loaded.overrides.eps && !options.eps_pinned) {
      config.eps = *loaded.overrides.eps;
    }

    Gain initial = lqr_initial_gain(loaded.plant);
    ClosedLoop cl0 = closed_loop(loaded.plant, initial);
    row.gamma0 = hinf_norm(cl0, config.tol_bis).gamma;

    // Only the synthesis itself is timed; loading and the baseline norm
    // above are setup.
    const auto start = std::chrono::steady_clock::now();
    SynthesisResult result = synthesize(loaded.plant, initial, config);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;

    row.time_seconds = elapsed.count();
    row.gamma_star = result.gamma_star;
    row.improvement_pct =
        (*row.gamma0 - result.gamma_star) / *row.gamma0 * 100.0;
    row.termination = to_string(result.termination_reason);
  } catch (const Error& e) {
    row.termination = "error:" + std::string(e.category());
  }
  return row;
}

}  // namespace

std::vector<ReportRow> run_benchmark(
    const std::vector<std::filesystem::path>& systems,
    const BenchmarkOptions& options) {
  std::vector<ReportRow> rows(systems.size());
  const int jobs =
      std::max(1, std::min<int>(options.jobs,
                                static_cast<int>(systems.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < systems.size(); ++i) {
      rows[i] = run_one(systems[i], options);
    }
    return rows;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= systems.size()) {
        return;
      }
      rows[i] = run_one(systems[i], options);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back(worker);
  }
  for (std::thread& t : pool) {
    t.join();
  }
  return rows;
}

}  // namespace hinfsyn
