// Microbenchmarks for the per-iteration building blocks: Lyapunov solve,
// Riccati solve, norm bisection, and a full gradient evaluation, each over
// spring-mass chains of growing state dimension. Run with
// --benchmark_filter=... to narrow.

#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "hinfsyn/demo_systems.hpp"
#include "hinfsyn/gradient.hpp"
#include "hinfsyn/hinf_norm.hpp"
#include "hinfsyn/matrix_equations.hpp"

namespace {

using hinfsyn::ClosedLoop;
using hinfsyn::Gain;
using hinfsyn::Plant;

ClosedLoop chain_closed_loop(Eigen::Index masses) {
  Plant plant = hinfsyn::chained_mass_plant(masses);
  Gain zero{Eigen::MatrixXd::Zero(plant.m(), plant.n())};
  return closed_loop(plant, zero);
}

void BM_lyapunov(benchmark::State& state) {
  const ClosedLoop cl = chain_closed_loop(state.range(0));
  const Eigen::Index n = cl.Ac.rows();
  const Eigen::MatrixXd Q = 0.1 * Eigen::MatrixXd::Identity(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hinfsyn::solve_lyapunov(cl.Ac, Q));
  }
}

void BM_riccati(benchmark::State& state) {
  const ClosedLoop cl = chain_closed_loop(state.range(0));
  const double beta =
      1.001 * hinfsyn::hinf_norm(cl).beta;  // just above the critical level
  for (auto _ : state) {
    benchmark::DoNotOptimize(hinfsyn::solve_care_hinf(cl, beta));
  }
}

void BM_hinf_norm(benchmark::State& state) {
  const ClosedLoop cl = chain_closed_loop(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hinfsyn::hinf_norm(cl));
  }
}

// One synthesis iteration's numerical payload: norm already known, so this
// is the Riccati + Lyapunov + gradient assembly cost.
void BM_gradient(benchmark::State& state) {
  const ClosedLoop cl = chain_closed_loop(state.range(0));
  const Gain zero{
      Eigen::MatrixXd::Zero(cl.plant.m(), cl.plant.n())};
  const double beta = hinfsyn::hinf_norm(cl).beta;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hinfsyn::gradient_f_eta(cl.plant, zero, beta, 0.1));
  }
}

}  // namespace

BENCHMARK(BM_lyapunov)->Arg(10)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_riccati)->Arg(10)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hinf_norm)->Arg(10)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gradient)->Arg(10)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
