#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hinfsyn/plant.hpp"

namespace hinfsyn {

// Result of a certified H-infinity norm evaluation. gamma is the midpoint of
// the final bisection bracket [lower, upper]; beta = gamma^2 is the squared
// level the synthesis code works with.
struct HinfEvaluation {
  double gamma = 0.0;
  double beta = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;                     // bisection steps taken
  std::vector<double> probe_frequencies;  // seed frequencies, for diagnostics
};

// The 2n x 2n level-test matrix
//
//   H(beta) = [ Ac            (1/beta) B1 B1' ]
//             [ -C1' C1       -Ac'            ]
//
// For a Hurwitz Ac, gamma = sqrt(beta) exceeds the closed-loop H-infinity
// norm exactly when H(beta) has no eigenvalues on the imaginary axis.
Eigen::MatrixXd hamiltonian(const ClosedLoop& cl, double beta);

// Scale-relative default tolerance for the imaginary-axis decision,
// 1e-8 * (1 + ||H||_F). The Riccati solver shares this exact constant so the
// two modules agree about which levels are degenerate.
double imaginary_axis_tolerance(const Eigen::Ref<const Eigen::MatrixXd>& H);

// True when some eigenvalue lambda of H satisfies
// |Re(lambda)| <= tol_im * (1 + |lambda|).
bool has_imaginary_axis_eig(const Eigen::Ref<const Eigen::MatrixXd>& H,
                            double tol_im);
bool has_imaginary_axis_eig(const Eigen::Ref<const Eigen::MatrixXd>& H);

// Certified H-infinity norm by bisection on the level-test matrix. The lower
// seed is the largest frequency-response gain over omega = 0 and 32
// log-spaced probe frequencies scaled by the spectral radius of Ac; the upper
// seed doubles from there until the level test passes. The returned bracket
// satisfies upper - lower <= tol_bis * max(1, lower). Throws
// UnstableClosedLoopError when Ac is not Hurwitz.
HinfEvaluation hinf_norm(const ClosedLoop& cl, double tol_bis = 1e-6);

// Plain frequency sweep: max of sigma_max_response over the given grid. A
// lower bound on the true norm; used as an independent cross-check of the
// bisection.
double hinf_norm_grid_oracle(const ClosedLoop& cl,
                             const std::vector<double>& omega_grid);

// count log-spaced points from lo to hi inclusive (lo > 0).
std::vector<double> log_spaced_grid(double lo, double hi, int count);

}  // namespace hinfsyn
