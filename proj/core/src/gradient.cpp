#include "hinfsyn/gradient.hpp"

#include <cmath>
#include <string>

#include "hinfsyn/matrix_equations.hpp"

namespace hinfsyn {

GradientEvaluation gradient_f_eta(const Plant& plant, const Gain& K0,
                                  double beta, double eta,
                                  double delta_beta) {
  if (!(beta > 0) || !std::isfinite(beta)) {
    throw InvalidArgumentError("beta must be positive and finite");
  }
  if (!(eta > 0) || !std::isfinite(eta)) {
    throw InvalidArgumentError("eta must be positive and finite");
  }
  if (!(delta_beta >= 0) || !std::isfinite(delta_beta)) {
    throw InvalidArgumentError("delta_beta must be nonnegative and finite");
  }

  const ClosedLoop cl = closed_loop(plant, K0);
  GradientEvaluation out;
  out.beta_used = beta * (1.0 + delta_beta);

  AreSolution are;
  try {
    are = solve_care_hinf(cl, out.beta_used);
  } catch (const NoStabilizingSolutionError& e) {
    throw NoStabilizingSolutionError(
        std::string(e.what()) +
        "; if beta came from the norm bisection, increase delta_beta to "
        "evaluate further above the critical level");
  }
  out.P = std::move(are.P);
  out.A1 = std::move(are.A1);

  const Eigen::Index n = plant.n();
  const LyapunovSolution lyap = solve_lyapunov(
      out.A1, eta * Eigen::MatrixXd::Identity(n, n));
  out.L0 = lyap.L;

  // L0 solves a Lyapunov equation with Hurwitz dynamics and positive
  // definite right-hand side, so it must be positive definite; a failed
  // factorization here means the solve has degraded beyond use.
  Eigen::LLT<Eigen::MatrixXd> llt(out.L0);
  if (llt.info() != Eigen::Success) {
    throw NumericalError(
        "gradient_f_eta: Lyapunov solution is not positive definite; the "
        "gradient would be meaningless");
  }

  out.grad = 2.0 *
             (plant.B().transpose() * out.P +
              plant.D().transpose() * plant.C() +
              plant.D().transpose() * plant.D() * K0.K) *
             out.L0;
  out.f_eta = out.beta_used + eta * out.P.trace();
  return out;
}

}  // namespace hinfsyn
