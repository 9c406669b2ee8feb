#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hinfsyn/plant.hpp"

namespace hinfsyn {

enum class AlphaPolicy {
  persist,  // carry the dynamic alpha into the next outer iteration
  reset,    // start every line search back at alpha0
};

struct SynthesisConfig {
  double eps = 1e-5;          // stop when |f(K_{j+1}) - f(K_j)| <= eps
  double alpha0 = 0.3;        // initial Armijo slope fraction
  double zeta = 0.5;          // step shrink factor, in (0, 1)
  double eta = 0.1;           // smoothing weight on tr(P)
  double delta_beta = 1e-3;   // relative margin above the bisected level
  double s_min = 1e-15;       // below this step, reset s and shrink alpha
  double alpha_shrink = 5.0;  // alpha divisor on each reset
  int max_outer_iters = 500;
  int max_armijo_iters = 200;  // objective evaluations per line search
  double tol_bis = 1e-6;       // norm bisection tolerance
  AlphaPolicy alpha_policy = AlphaPolicy::persist;

  void validate() const;  // throws ConfigError on out-of-range fields
};

// One accepted iterate. step and grad_norm describe the move that produced
// the iterate (both zero for the initial record), alpha is the dynamic alpha
// in effect after its line search, and wall_time_seconds is the time spent
// producing it.
struct IterationRecord {
  int index = 0;
  double beta = 0.0;
  double gamma = 0.0;
  double step = 0.0;
  double alpha = 0.0;
  double grad_norm = 0.0;
  double wall_time_seconds = 0.0;
};

enum class TerminationReason {
  converged,
  iteration_cap,
  line_search_exhausted,
};

const char* to_string(TerminationReason reason);

struct SynthesisResult {
  Gain K_star;
  double gamma_star = 0.0;
  double beta_star = 0.0;  // gamma_star^2 exactly
  std::vector<IterationRecord> trace;
  TerminationReason termination_reason = TerminationReason::converged;
  std::vector<std::string> warnings;
};

// Squared closed-loop H-infinity norm at the given gain, or nullopt when the
// gain does not stabilize the plant. The nullopt is the line search's
// "trial failed" signal, so an unstable trial costs one stability check
// instead of an exception.
std::optional<double> evaluate_f(const Plant& plant, const Gain& gain,
                                 double tol_bis = 1e-6);

struct ArmijoResult {
  double step = 0.0;    // accepted s
  double alpha = 0.0;   // dynamic alpha after the search
  double f_trial = 0.0; // objective at K - step * direction
  int evaluations = 0;  // objective evaluations spent
};

// Backtracking line search with a self-tuning slope fraction: starting at
// s = 1, shrink s by zeta while
//
//   f(K - s m) >= f(K) - alpha s ||m||_F^2
//
// (an unstable trial counts as a failed test); when s falls below s_min,
// restart at s = 1 with alpha / alpha_shrink. The shrinking alpha is what
// copes with the gradient's magnitude being much larger than the descent it
// predicts near the level boundary. The demanded decrease is floored at a
// few ulps of f(K) so that evaluation jitter between nearly identical gains
// cannot pass as progress. Throws LineSearchExhaustedError after
// max_armijo_iters evaluations.
ArmijoResult modified_armijo(const Plant& plant, const Gain& K, double f_K,
                             const Eigen::Ref<const Eigen::MatrixXd>& direction,
                             double alpha_in, const SynthesisConfig& config);

namespace detail {
// The same search over an abstract objective; the plant overload evaluates
// trial gains with evaluate_f. Exposed for testing search dynamics against
// synthetic objectives.
using TrialObjective =
    std::function<std::optional<double>(const Eigen::MatrixXd& trial_gain)>;
ArmijoResult modified_armijo(const TrialObjective& objective,
                             const Eigen::MatrixXd& K, double f_K,
                             const Eigen::Ref<const Eigen::MatrixXd>& direction,
                             double alpha_in, const SynthesisConfig& config);
}  // namespace detail

// Gradient descent on f_eta starting from a stabilizing K0: evaluate the
// norm, take the Riccati/Lyapunov gradient, line-search along it, repeat
// until consecutive objective values differ by at most eps. Requires (A, B)
// stabilizable and (A, C) detectable (hard errors) and K0 stabilizing.
SynthesisResult synthesize(const Plant& plant, const Gain& K0,
                           const SynthesisConfig& config = {});

// Regulator gain from Q = I, R = I; the standard stabilizing starting point.
Gain lqr_initial_gain(const Plant& plant);

}  // namespace hinfsyn
