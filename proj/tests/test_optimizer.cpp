#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <random>

#include "hinfsyn/gradient.hpp"
#include "hinfsyn/hinf_norm.hpp"
#include "hinfsyn/optimizer.hpp"
#include "hinfsyn/plant.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hinfsyn;
using testsupport::sample_2x2_plant;
using testsupport::scalar_plant;

TEST_SUITE("optimizer") {

TEST_CASE("config validation rejects each out-of-range field") {
  SynthesisConfig good;
  CHECK_NOTHROW(good.validate());

  const auto expect_bad = [](auto&& mutate) {
    SynthesisConfig cfg;
    mutate(cfg);
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  };
  expect_bad([](SynthesisConfig& c) { c.eps = 0.0; });
  expect_bad([](SynthesisConfig& c) { c.alpha0 = -0.1; });
  expect_bad([](SynthesisConfig& c) { c.zeta = 1.0; });
  expect_bad([](SynthesisConfig& c) { c.eta = 0.0; });
  expect_bad([](SynthesisConfig& c) { c.delta_beta = -1.0; });
  expect_bad([](SynthesisConfig& c) { c.s_min = 0.0; });
  expect_bad([](SynthesisConfig& c) { c.alpha_shrink = 1.0; });
  expect_bad([](SynthesisConfig& c) { c.max_outer_iters = 0; });
  expect_bad([](SynthesisConfig& c) { c.max_armijo_iters = 0; });
  expect_bad([](SynthesisConfig& c) { c.tol_bis = 0.0; });
}

TEST_CASE("evaluate_f on the scalar plant") {
  const Plant plant = scalar_plant();

  // K = 0: the loop is 1/(s+1) with norm 1, so f = 1.
  auto f0 = evaluate_f(plant, Gain{Eigen::MatrixXd::Zero(1, 1)});
  REQUIRE(f0.has_value());
  CHECK(*f0 == doctest::Approx(1.0).epsilon(1e-5));

  // K = 0.5: Ac = -0.5, C1 = [1; 0.5]; the peak is at omega = 0 where
  // |G|^2 = (1 + 0.25) / 0.25 = 5.
  Eigen::MatrixXd K(1, 1);
  K << 0.5;
  auto fhalf = evaluate_f(plant, Gain{K});
  REQUIRE(fhalf.has_value());
  CHECK(*fhalf == doctest::Approx(5.0).epsilon(1e-5));

  // K = 2 destabilizes (Ac = 1): the signal is "no value", not a throw.
  K << 2.0;
  CHECK_FALSE(evaluate_f(plant, Gain{K}).has_value());
}

TEST_CASE("modified_armijo accepts s = 1 immediately on a small step") {
  const Plant plant = scalar_plant();
  const Gain K{Eigen::MatrixXd::Zero(1, 1)};
  Eigen::MatrixXd dir(1, 1);
  dir << 0.01;
  // f(-0.01) = (1 + 1e-4) / 1.01^2 ~ 0.9805 < 1 - 0.3 * 1e-4.
  const ArmijoResult res = modified_armijo(plant, K, 1.0, dir, 0.3, {});
  CHECK(res.step == 1.0);
  CHECK(res.alpha == 0.3);
  CHECK(res.evaluations == 1);
}

TEST_CASE("modified_armijo shrinks once on an oversized step") {
  const Plant plant = scalar_plant();
  const Gain K{Eigen::MatrixXd::Zero(1, 1)};
  Eigen::MatrixXd dir(1, 1);
  dir << 1.5;
  // s = 1: f(-1.5) = 3.25/6.25 = 0.52, needs < 1 - 0.3*2.25 = 0.325, fails.
  // s = 0.5: f(-0.75) = 1.5625/3.0625 ~ 0.5102, needs < 0.6625, passes.
  const ArmijoResult res = modified_armijo(plant, K, 1.0, dir, 0.3, {});
  CHECK(res.step == 0.5);
  CHECK(res.alpha == 0.3);
  CHECK(res.f_trial == doctest::Approx(1.5625 / 3.0625).epsilon(1e-4));
  CHECK(res.evaluations == 2);
}

TEST_CASE("modified_armijo resets s and shrinks alpha when s underflows") {
  // Synthetic objective phi(s) = 1 - 0.2 s^1.2 along the ray K - s. The
  // acceptance test "phi(s) < 1 - alpha s" reduces to 0.2 s^0.2 > alpha:
  // impossible for alpha = 0.3 (s <= 1 gives 0.2 s^0.2 <= 0.2), so every s
  // down to s_min fails, and the first trial after the reset to s = 1 with
  // alpha = 0.3/5 = 0.06 passes.
  const detail::TrialObjective objective =
      [](const Eigen::MatrixXd& trial) -> std::optional<double> {
    const double s = -trial(0, 0);
    return 1.0 - 0.2 * std::pow(s, 1.2);
  };
  const Eigen::MatrixXd K = Eigen::MatrixXd::Zero(1, 1);
  Eigen::MatrixXd dir(1, 1);
  dir << 1.0;
  const ArmijoResult res =
      detail::modified_armijo(objective, K, 1.0, dir, 0.3, {});
  CHECK(res.step == 1.0);
  CHECK(res.alpha == doctest::Approx(0.06));
  CHECK(res.f_trial == doctest::Approx(0.8));
  // 50 shrinking trials (0.5^49 is still >= s_min) plus the accepted one.
  CHECK(res.evaluations == 51);
}

TEST_CASE("modified_armijo throws after its evaluation budget") {
  const detail::TrialObjective never =
      [](const Eigen::MatrixXd&) -> std::optional<double> {
    return std::nullopt;  // every trial unstable
  };
  const Eigen::MatrixXd K = Eigen::MatrixXd::Zero(1, 1);
  Eigen::MatrixXd dir(1, 1);
  dir << 1.0;
  SynthesisConfig cfg;
  cfg.max_armijo_iters = 7;
  CHECK_THROWS_AS(detail::modified_armijo(never, K, 1.0, dir, 0.3, cfg),
                  LineSearchExhaustedError);
}

TEST_CASE("modified_armijo validates its inputs") {
  const Plant plant = scalar_plant();
  const Gain K{Eigen::MatrixXd::Zero(1, 1)};
  Eigen::MatrixXd dir(1, 1);
  dir << 0.0;
  CHECK_THROWS_AS(modified_armijo(plant, K, 1.0, dir, 0.3, {}),
                  InvalidArgumentError);
  dir << 1.0;
  CHECK_THROWS_AS(modified_armijo(plant, K, 1.0, dir, -0.3, {}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(
      modified_armijo(plant, K, 1.0, Eigen::MatrixXd::Ones(2, 2), 0.3, {}),
      DimensionError);
}

TEST_CASE("synthesize drives the scalar plant toward its optimum") {
  // f(k) = (1 + k^2) / (1 - k)^2 over stabilizing k < 1 has its minimum at
  // k = -1 with f = 1/2.
  const Plant plant = scalar_plant();
  const SynthesisResult res =
      synthesize(plant, Gain{Eigen::MatrixXd::Zero(1, 1)});

  CHECK(res.termination_reason == TerminationReason::converged);
  CHECK(res.trace.size() < 100);
  CHECK(res.gamma_star < 0.72);
  CHECK(res.gamma_star >= 1.0 / std::sqrt(2.0) - 1e-3);
  CHECK(res.K_star.K(0, 0) == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(res.beta_star == res.gamma_star * res.gamma_star);

  // Strict descent plus the recorded acceptance certificate, straight off
  // the trace.
  for (std::size_t j = 1; j < res.trace.size(); ++j) {
    const IterationRecord& prev = res.trace[j - 1];
    const IterationRecord& cur = res.trace[j];
    CHECK(cur.beta < prev.beta);
    CHECK(cur.beta < prev.beta - cur.alpha * cur.step *
                                     cur.grad_norm * cur.grad_norm);
  }
}

TEST_CASE("synthesize stops immediately when control cannot act") {
  // B = 0 and D = 0 make the gradient identically zero: the trace is just
  // the initial point and gamma_star equals the initial norm.
  Eigen::MatrixXd A(1, 1), B(1, 1), B1(1, 1), C(1, 1), D(1, 1);
  A << -1.0;
  B << 0.0;
  B1 << 1.0;
  C << 1.0;
  D << 0.0;
  const Plant plant = make_plant(A, B, B1, C, D);
  const SynthesisResult res =
      synthesize(plant, Gain{Eigen::MatrixXd::Zero(1, 1)});
  CHECK(res.termination_reason == TerminationReason::converged);
  CHECK(res.trace.size() == 1);
  CHECK(res.gamma_star == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(res.K_star.K(0, 0) == 0.0);
}

TEST_CASE("synthesize rejects bad starting points and bad plants") {
  const Plant plant = scalar_plant();
  Eigen::MatrixXd K(1, 1);
  K << 2.0;  // Ac = 1, unstable
  CHECK_THROWS_AS(synthesize(plant, Gain{K}), UnstableClosedLoopError);

  Eigen::MatrixXd A(2, 2), B(2, 1), B1(2, 2), C(2, 2), D(2, 1);
  A << 1.0, 0.0,
       0.0, -1.0;
  B << 0.0, 1.0;  // unstable mode 1 unreachable
  B1 = Eigen::MatrixXd::Identity(2, 2);
  C = Eigen::MatrixXd::Identity(2, 2);
  D.setZero();
  const Plant bad = make_plant(A, B, B1, C, D);
  CHECK_THROWS_AS(synthesize(bad, Gain{Eigen::MatrixXd::Zero(1, 2)}),
                  AssumptionError);
}

TEST_CASE("synthesize reports the iteration cap") {
  SynthesisConfig cfg;
  cfg.max_outer_iters = 1;
  cfg.eps = 1e-18;  // unreachable, so the cap is what stops the loop
  const SynthesisResult res = synthesize(
      scalar_plant(), Gain{Eigen::MatrixXd::Zero(1, 1)}, cfg);
  CHECK(res.termination_reason == TerminationReason::iteration_cap);
  CHECK(res.trace.size() == 2);
}

TEST_CASE("synthesize reports line-search exhaustion and keeps the best gain") {
  SynthesisConfig cfg;
  cfg.max_armijo_iters = 1;  // the first oversized trial exhausts the budget
  const SynthesisResult res = synthesize(
      scalar_plant(), Gain{Eigen::MatrixXd::Zero(1, 1)}, cfg);
  CHECK(res.termination_reason == TerminationReason::line_search_exhausted);
  CHECK(res.trace.size() == 1);
  CHECK(res.K_star.K(0, 0) == 0.0);
  CHECK(res.gamma_star == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("alpha policy: persist carries the tuned alpha, reset does not") {
  SynthesisConfig persist;
  persist.alpha_policy = AlphaPolicy::persist;
  SynthesisConfig reset;
  reset.alpha_policy = AlphaPolicy::reset;

  const Plant plant = scalar_plant();
  const Gain K0{Eigen::MatrixXd::Zero(1, 1)};
  const SynthesisResult a = synthesize(plant, K0, persist);
  const SynthesisResult b = synthesize(plant, K0, reset);
  CHECK(a.termination_reason == TerminationReason::converged);
  CHECK(b.termination_reason == TerminationReason::converged);
  CHECK(a.gamma_star == doctest::Approx(b.gamma_star).epsilon(1e-2));
}

TEST_CASE("synthesize surfaces the disturbance-channel advisory") {
  // (A, B1) unstabilizable is a warning, not an error: mode 1 is unstable
  // and B1 cannot reach it, but B can, so synthesis still proceeds.
  Eigen::MatrixXd A(2, 2), B(2, 2), B1(2, 1), C(2, 2), D(2, 2);
  A << 1.0, 0.0,
       0.0, -1.0;
  B = Eigen::MatrixXd::Identity(2, 2);
  B1 << 0.0, 1.0;
  C = Eigen::MatrixXd::Identity(2, 2);
  D = Eigen::MatrixXd::Identity(2, 2);
  const Plant plant = make_plant(A, B, B1, C, D);
  const Gain K0 = lqr_initial_gain(plant);
  const SynthesisResult res = synthesize(plant, K0);
  REQUIRE(res.warnings.size() == 1);
  CHECK(res.warnings[0].find("(A, B1)") != std::string::npos);
}

TEST_CASE("lqr_initial_gain scalar closed forms") {
  Eigen::MatrixXd A(1, 1), B(1, 1), B1(1, 1), C(2, 1), D(2, 1);
  B << 1.0;
  B1 << 1.0;
  C << 1.0, 0.0;
  D << 0.0, 1.0;

  A << 1.0;
  const Gain k_unstable = lqr_initial_gain(make_plant(A, B, B1, C, D));
  CHECK(k_unstable.K(0, 0) ==
        doctest::Approx(-(1.0 + std::sqrt(2.0))).epsilon(1e-9));

  A << -1.0;
  const Gain k_stable = lqr_initial_gain(make_plant(A, B, B1, C, D));
  CHECK(k_stable.K(0, 0) ==
        doctest::Approx(-(std::sqrt(2.0) - 1.0)).epsilon(1e-9));
}

TEST_CASE("lqr_initial_gain stabilizes the sample system") {
  const Plant plant = sample_2x2_plant();
  const Gain K0 = lqr_initial_gain(plant);
  CHECK(is_hurwitz(plant.A() + plant.B() * K0.K));
  const auto f = evaluate_f(plant, K0);
  REQUIRE(f.has_value());
  CHECK(std::isfinite(*f));
}

}  // TEST_SUITE
