#pragma once

#include <Eigen/Dense>

#include "hinfsyn/plant.hpp"

namespace hinfsyn {

// One gradient evaluation of the smoothed objective
//
//   f_eta(K) = beta_used + eta * tr(P),
//
// where P solves the level-beta_used Riccati equation at gain K0 and
// beta_used = beta * (1 + delta_beta) keeps the solve strictly above the
// critical level when the caller hands in beta straight from the norm
// bisection.
struct GradientEvaluation {
  Eigen::MatrixXd grad;   // m x n gradient of f_eta with respect to K
  Eigen::MatrixXd P;      // stabilizing Riccati solution at beta_used
  Eigen::MatrixXd L0;     // Lyapunov solution: A1 L0 + L0 A1' + eta I = 0
  Eigen::MatrixXd A1;     // Ac + (1/beta_used) B1 B1' P
  double beta_used = 0.0;
  double f_eta = 0.0;
};

// Evaluates grad f_eta(K0) = 2 (B' P + D' C + D' D K0) L0 via one Riccati
// solve and one Lyapunov solve. f_eta upper-bounds the squared norm, so
// driving it down drives the norm down while tr(P) keeps iterates away from
// the level boundary where the gradient would blow up.
GradientEvaluation gradient_f_eta(const Plant& plant, const Gain& K0,
                                  double beta, double eta,
                                  double delta_beta = 1e-3);

}  // namespace hinfsyn
