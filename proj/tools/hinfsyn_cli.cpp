// Command-line front end: synthesize controllers, evaluate norms, validate
// system files, and batch-benchmark a directory of systems.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hinfsyn/benchmark_runner.hpp"
#include "hinfsyn/errors.hpp"
#include "hinfsyn/hinf_norm.hpp"
#include "hinfsyn/optimizer.hpp"
#include "hinfsyn/report.hpp"
#include "hinfsyn/system_io.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Tuning flags shared by synth and bench. Each option remembers whether the
// user passed it so file-level overrides only fill the gaps.
struct TuningFlags {
  hinfsyn::SynthesisConfig config;
  CLI::Option* alpha0_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  std::string alpha_policy = "persist";

  void attach(CLI::App* cmd) {
    eps_opt = cmd->add_option("--eps", config.eps,
                              "convergence threshold on the squared-norm "
                              "decrease per iteration");
    alpha0_opt = cmd->add_option("--alpha0", config.alpha0,
                                 "initial Armijo slope fraction");
    cmd->add_option("--zeta", config.zeta, "line-search step shrink factor");
    cmd->add_option("--eta", config.eta, "smoothing weight on tr(P)");
    cmd->add_option("--delta-beta", config.delta_beta,
                    "relative margin above the bisected level");
    cmd->add_option("--tol-bis", config.tol_bis, "norm bisection tolerance");
    cmd->add_option("--max-outer-iters", config.max_outer_iters,
                    "gradient iteration cap");
    cmd->add_option("--max-armijo-iters", config.max_armijo_iters,
                    "objective evaluations per line search");
    cmd->add_option("--alpha-policy", alpha_policy,
                    "carry the tuned alpha across iterations (persist) or "
                    "restart each search at alpha0 (reset)")
        ->check(CLI::IsMember({"persist", "reset"}));
  }

  hinfsyn::SynthesisConfig resolve(const hinfsyn::SystemOverrides& overrides) {
    hinfsyn::SynthesisConfig out = config;
    out.alpha_policy = alpha_policy == "reset" ? hinfsyn::AlphaPolicy::reset
                                               : hinfsyn::AlphaPolicy::persist;
    if (overrides.alpha0 && alpha0_opt->count() == 0) {
      out.alpha0 = *overrides.alpha0;
    }
    if (overrides.eps && eps_opt->count() == 0) {
      out.eps = *overrides.eps;
    }
    return out;
  }
};

json matrix_to_json(const Eigen::MatrixXd& M) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      arr.push_back(M(i, j));
    }
  }
  return arr;
}

void write_synthesis_result(const fs::path& path, const std::string& name,
                            const hinfsyn::Plant& plant,
                            const hinfsyn::SynthesisResult& result) {
  json doc;
  doc["system"] = name;
  doc["m"] = plant.m();
  doc["n"] = plant.n();
  doc["K"] = matrix_to_json(result.K_star.K);
  doc["gamma"] = result.gamma_star;
  doc["beta"] = result.beta_star;
  doc["termination"] = hinfsyn::to_string(result.termination_reason);
  json trace = json::array();
  for (const hinfsyn::IterationRecord& rec : result.trace) {
    trace.push_back({{"index", rec.index},
                     {"beta", rec.beta},
                     {"gamma", rec.gamma},
                     {"step", rec.step},
                     {"alpha", rec.alpha},
                     {"grad_norm", rec.grad_norm},
                     {"wall_time_seconds", rec.wall_time_seconds}});
  }
  doc["trace"] = std::move(trace);
  std::ofstream out(path);
  if (!out) {
    throw hinfsyn::IoError("cannot open " + path.string() + " for writing");
  }
  out << doc.dump(2) << '\n';
}

int cmd_synth(const std::string& system_path,
              const std::string& gain_path, TuningFlags& tuning,
              const std::string& out_path) {
  hinfsyn::LoadedSystem loaded = hinfsyn::load_system(system_path);
  const hinfsyn::SynthesisConfig config = tuning.resolve(loaded.overrides);

  hinfsyn::Gain initial =
      gain_path.empty() ? hinfsyn::lqr_initial_gain(loaded.plant)
                        : hinfsyn::load_gain(gain_path, loaded.plant);
  const hinfsyn::HinfEvaluation eval0 =
      hinfsyn::hinf_norm(hinfsyn::closed_loop(loaded.plant, initial),
                         config.tol_bis);

  hinfsyn::SynthesisResult result =
      hinfsyn::synthesize(loaded.plant, initial, config);

  for (const std::string& w : loaded.plant.warnings()) {
    std::cerr << "hinfsyn: warning: " << w << '\n';
  }
  for (const std::string& w : result.warnings) {
    std::cerr << "hinfsyn: warning: " << w << '\n';
  }

  std::printf("system        %s\n", loaded.name.c_str());
  std::printf("gamma(K0)     %.6f\n", eval0.gamma);
  std::printf("gamma(K*)     %.6f\n", result.gamma_star);
  std::printf("improvement   %.2f%%\n",
              (eval0.gamma - result.gamma_star) / eval0.gamma * 100.0);
  std::printf("iterations    %zu\n", result.trace.size() - 1);
  std::printf("termination   %s\n",
              hinfsyn::to_string(result.termination_reason));
  if (!out_path.empty()) {
    write_synthesis_result(out_path, loaded.name, loaded.plant, result);
    std::printf("wrote         %s\n", out_path.c_str());
  }
  return 0;
}

int cmd_norm(const std::string& system_path, const std::string& gain_path,
             double tol_bis) {
  hinfsyn::LoadedSystem loaded = hinfsyn::load_system(system_path);
  hinfsyn::Gain gain{
      Eigen::MatrixXd::Zero(loaded.plant.m(), loaded.plant.n())};
  if (!gain_path.empty()) {
    gain = hinfsyn::load_gain(gain_path, loaded.plant);
  }
  const hinfsyn::HinfEvaluation eval =
      hinfsyn::hinf_norm(hinfsyn::closed_loop(loaded.plant, gain), tol_bis);
  std::printf("system      %s\n", loaded.name.c_str());
  std::printf("gamma       %.12g\n", eval.gamma);
  std::printf("bracket     [%.12g, %.12g]\n", eval.lower, eval.upper);
  std::printf("bisections  %d\n", eval.iterations);
  return 0;
}

int cmd_validate(const std::string& system_path) {
  hinfsyn::LoadedSystem loaded = hinfsyn::load_system(system_path);
  std::printf("system  %s\n", loaded.name.c_str());
  std::printf("dims    n=%td m=%td m1=%td r=%td\n", loaded.plant.n(),
              loaded.plant.m(), loaded.plant.m1(), loaded.plant.r());
  if (loaded.plant.warnings().empty()) {
    std::printf("checks  ok\n");
  } else {
    for (const std::string& w : loaded.plant.warnings()) {
      std::printf("warning %s\n", w.c_str());
    }
  }
  return 0;
}

int cmd_bench(const std::string& dir, const std::string& report_path,
              int jobs, TuningFlags& tuning) {
  std::vector<fs::path> systems;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      systems.push_back(entry.path());
    }
  }
  std::sort(systems.begin(), systems.end());
  if (systems.empty()) {
    throw hinfsyn::IoError("no .json system files in " + dir);
  }

  hinfsyn::BenchmarkOptions options;
  options.config = tuning.resolve({});
  options.jobs = jobs;
  options.alpha0_pinned = tuning.alpha0_opt->count() > 0;
  options.eps_pinned = tuning.eps_opt->count() > 0;

  const std::vector<hinfsyn::ReportRow> rows =
      hinfsyn::run_benchmark(systems, options);
  std::fputs(
      hinfsyn::emit_report(rows, hinfsyn::ReportFormat::human).c_str(),
      stdout);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      throw hinfsyn::IoError("cannot open " + report_path +
                             " for writing");
    }
    out << hinfsyn::emit_report(rows, hinfsyn::ReportFormat::csv);
    std::printf("wrote %s\n", report_path.c_str());
  }
  // Partial failure is visible in the table but should also fail scripts.
  const bool all_ok = std::all_of(
      rows.begin(), rows.end(), [](const hinfsyn::ReportRow& row) {
        return row.termination.rfind("error:", 0) != 0;
      });
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"H-infinity state-feedback synthesis by gradient descent"};
  app.require_subcommand(1);

  std::string system_path;
  std::string gain_path;
  std::string out_path;
  std::string report_path;
  std::string bench_dir;
  double norm_tol_bis = 1e-6;
  int jobs = 1;
  TuningFlags synth_tuning;
  TuningFlags bench_tuning;

  CLI::App* synth = app.add_subcommand(
      "synth", "minimize the closed-loop H-infinity norm over state feedback");
  synth->add_option("--system", system_path, "system JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  synth->add_option("--gain", gain_path,
                    "initial stabilizing gain (default: LQR with Q=I, R=I)")
      ->check(CLI::ExistingFile);
  synth->add_option("--out", out_path,
                    "write the final gain and iteration trace as JSON");
  synth_tuning.attach(synth);

  CLI::App* norm = app.add_subcommand(
      "norm", "certified closed-loop H-infinity norm at a fixed gain");
  norm->add_option("--system", system_path, "system JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  norm->add_option("--gain", gain_path, "gain JSON file (default: K = 0)")
      ->check(CLI::ExistingFile);
  norm->add_option("--tol-bis", norm_tol_bis, "bisection tolerance");

  CLI::App* validate = app.add_subcommand(
      "validate", "parse a system file and report dimensions and warnings");
  validate->add_option("--system", system_path, "system JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* bench = app.add_subcommand(
      "bench", "synthesize controllers for every system in a directory");
  bench->add_option("--dir", bench_dir, "directory of system JSON files")
      ->required()
      ->check(CLI::ExistingDirectory);
  bench->add_option("--report", report_path, "write a CSV report here");
  bench->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  bench_tuning.attach(bench);

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      return cmd_synth(system_path, gain_path, synth_tuning, out_path);
    }
    if (norm->parsed()) {
      return cmd_norm(system_path, gain_path, norm_tol_bis);
    }
    if (validate->parsed()) {
      return cmd_validate(system_path);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_dir, report_path, jobs, bench_tuning);
    }
  } catch (const hinfsyn::Error& e) {
    std::cerr << "hinfsyn: error: category=" << e.category() << ": "
              << e.what() << '\n';
    return 1;
  }
  return 0;
}
