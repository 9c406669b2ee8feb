#include "hinfsyn/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "hinfsyn/gradient.hpp"
#include "hinfsyn/hinf_norm.hpp"
#include "hinfsyn/matrix_equations.hpp"

namespace hinfsyn {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

void SynthesisConfig::validate() const {
  const auto bad = [](const char* what) { throw ConfigError(what); };
  if (!(eps > 0) || !std::isfinite(eps)) bad("eps must be positive and finite");
  if (!(alpha0 > 0) || !std::isfinite(alpha0)) bad("alpha0 must be positive and finite");
  if (!(zeta > 0) || !(zeta < 1)) bad("zeta must lie in (0, 1)");
  if (!(eta > 0) || !std::isfinite(eta)) bad("eta must be positive and finite");
  if (!(delta_beta >= 0) || !std::isfinite(delta_beta)) bad("delta_beta must be nonnegative and finite");
  if (!(s_min > 0) || !(s_min < 1)) bad("s_min must lie in (0, 1)");
  if (!(alpha_shrink > 1) || !std::isfinite(alpha_shrink)) bad("alpha_shrink must exceed 1");
  if (max_outer_iters < 1) bad("max_outer_iters must be at least 1");
  if (max_armijo_iters < 1) bad("max_armijo_iters must be at least 1");
  if (!(tol_bis > 0) || !std::isfinite(tol_bis)) bad("tol_bis must be positive and finite");
}

const char* to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::converged:
      return "converged";
    case TerminationReason::iteration_cap:
      return "iteration_cap";
    case TerminationReason::line_search_exhausted:
      return "line_search_exhausted";
  }
  return "unknown";
}

std::optional<double> evaluate_f(const Plant& plant, const Gain& gain,
                                 double tol_bis) {
  const ClosedLoop cl = closed_loop(plant, gain);
  if (!is_hurwitz(cl.Ac)) {
    return std::nullopt;
  }
  return hinf_norm(cl, tol_bis).beta;
}

namespace detail {

ArmijoResult modified_armijo(const TrialObjective& objective,
                             const Eigen::MatrixXd& K, double f_K,
                             const Eigen::Ref<const Eigen::MatrixXd>& direction,
                             double alpha_in, const SynthesisConfig& config) {
  config.validate();
  if (direction.rows() != K.rows() || direction.cols() != K.cols()) {
    throw DimensionError("line-search direction must have the gain's shape");
  }
  if (!std::isfinite(f_K)) {
    throw InvalidArgumentError("f(K) must be finite to line-search from it");
  }
  if (!(alpha_in > 0) || !std::isfinite(alpha_in)) {
    throw InvalidArgumentError("alpha must be positive and finite");
  }
  const double dir_sq = direction.squaredNorm();
  if (!(dir_sq > 0)) {
    throw InvalidArgumentError("line-search direction must be nonzero");
  }

  // At very small s the demanded decrease alpha * s * ||m||^2 falls below
  // the objective's floating-point resolution, and last-ulp jitter between
  // two nearly identical evaluations would pass the test. Flooring the
  // demand at a few ulps of f(K) rejects those phantom acceptances, so the
  // s-reset / alpha-shrink path handles the situation as intended.
  const double resolution = 64.0 * std::numeric_limits<double>::epsilon() *
                            std::max(1.0, std::abs(f_K));

  ArmijoResult out;
  double s = 1.0;
  double alpha = alpha_in;
  for (;;) {
    if (out.evaluations >= config.max_armijo_iters) {
      std::ostringstream os;
      os << "line search spent its " << config.max_armijo_iters
         << " evaluations without an acceptable step (last s = " << s
         << ", alpha = " << alpha << ")";
      throw LineSearchExhaustedError(os.str(), s, alpha);
    }
    const std::optional<double> trial = objective(K - s * direction);
    ++out.evaluations;
    if (trial.has_value() &&
        *trial < f_K - std::max(alpha * s * dir_sq, resolution)) {
      out.step = s;
      out.alpha = alpha;
      out.f_trial = *trial;
      return out;
    }
    s *= config.zeta;
    if (s < config.s_min) {
      s = 1.0;
      alpha /= config.alpha_shrink;
    }
  }
}

}  // namespace detail

ArmijoResult modified_armijo(const Plant& plant, const Gain& K, double f_K,
                             const Eigen::Ref<const Eigen::MatrixXd>& direction,
                             double alpha_in, const SynthesisConfig& config) {
  const auto objective = [&plant, &config](const Eigen::MatrixXd& trial) {
    return evaluate_f(plant, Gain{trial}, config.tol_bis);
  };
  return detail::modified_armijo(objective, K.K, f_K, direction, alpha_in,
                                 config);
}

SynthesisResult synthesize(const Plant& plant, const Gain& K0,
                           const SynthesisConfig& config) {
  config.validate();
  if (!check_stabilizable(plant.A(), plant.B())) {
    throw AssumptionError(
        "(A, B) is not stabilizable; no gain can stabilize this plant");
  }
  if (!check_detectable(plant.A(), plant.C())) {
    throw AssumptionError(
        "(A, C) is not detectable; the objective cannot certify internal "
        "stability for this plant");
  }

  SynthesisResult result;
  if (!check_stabilizable(plant.A(), plant.B1())) {
    result.warnings.push_back(
        "(A, B1) is not stabilizable; the disturbance channel cannot excite "
        "some unstable modes");
  }

  const ClosedLoop cl0 = closed_loop(plant, K0);
  if (!is_hurwitz(cl0.Ac)) {
    throw UnstableClosedLoopError(
        "initial gain does not stabilize the plant; synthesis needs a "
        "stabilizing starting point");
  }

  auto iter_start = Clock::now();
  const HinfEvaluation eval0 = hinf_norm(cl0, config.tol_bis);

  Eigen::MatrixXd K = K0.K;
  double beta = eval0.beta;
  double alpha = config.alpha0;
  result.trace.push_back({0, beta, eval0.gamma, 0.0, alpha, 0.0,
                          seconds_since(iter_start)});
  result.termination_reason = TerminationReason::iteration_cap;

  for (int j = 0; j < config.max_outer_iters; ++j) {
    iter_start = Clock::now();
    const GradientEvaluation g =
        gradient_f_eta(plant, Gain{K}, beta, config.eta, config.delta_beta);
    const double grad_norm = g.grad.norm();
    if (grad_norm == 0.0) {
      // Nowhere to descend; the current iterate is stationary for f_eta.
      result.termination_reason = TerminationReason::converged;
      break;
    }

    ArmijoResult ls;
    try {
      ls = modified_armijo(plant, Gain{K}, beta, g.grad, alpha, config);
    } catch (const LineSearchExhaustedError&) {
      result.termination_reason = TerminationReason::line_search_exhausted;
      break;
    }

    K -= ls.step * g.grad;
    const double beta_prev = beta;
    beta = ls.f_trial;
    alpha = config.alpha_policy == AlphaPolicy::persist ? ls.alpha
                                                        : config.alpha0;
    result.trace.push_back({j + 1, beta, std::sqrt(beta), ls.step, ls.alpha,
                            grad_norm, seconds_since(iter_start)});
    if (std::abs(beta - beta_prev) <= config.eps) {
      result.termination_reason = TerminationReason::converged;
      break;
    }
  }

  result.K_star = Gain{K};
  result.gamma_star = std::sqrt(beta);
  result.beta_star = result.gamma_star * result.gamma_star;
  return result;
}

Gain lqr_initial_gain(const Plant& plant) {
  return solve_care_lqr(plant.A(), plant.B(),
                        Eigen::MatrixXd::Identity(plant.n(), plant.n()),
                        Eigen::MatrixXd::Identity(plant.m(), plant.m()))
      .gain;
}

}  // namespace hinfsyn
