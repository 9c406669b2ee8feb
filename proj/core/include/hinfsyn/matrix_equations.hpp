#pragma once

#include <Eigen/Dense>

#include "hinfsyn/plant.hpp"

namespace hinfsyn {

struct LyapunovSolution {
  Eigen::MatrixXd L;
  double residual_norm = 0.0;  // ||A1 L + L A1' + Q||_F after the solve
};

// Solves A1 L + L A1' + Q = 0 for symmetric Q by Bartels-Stewart: Schur
// reduce A1, solve the quasi-triangular Sylvester system, transform back.
// Throws IllPosedEquationError when some eigenvalue pair of A1 sums to
// (numerically) zero, which is exactly when the equation is singular.
LyapunovSolution solve_lyapunov(const Eigen::Ref<const Eigen::MatrixXd>& A1,
                                const Eigen::Ref<const Eigen::MatrixXd>& Q);

struct AreSolution {
  Eigen::MatrixXd P;           // stabilizing solution, symmetric PSD
  Eigen::MatrixXd A1;          // Ac + (1/beta) B1 B1' P, Hurwitz
  double residual_norm = 0.0;
};

// Stabilizing solution of the level-beta Riccati equation
//
//   Ac' P + P Ac + C1' C1 + (1/beta) P B1 B1' P = 0,
//
// extracted from the stable invariant subspace of the same Hamiltonian the
// norm bisection tests: P = X21 X11^{-1}, then symmetrized, with eigenvalues
// in [-tol, 0) clamped to zero. A solution exists and is stabilizing only
// for beta above the closed loop's squared norm; below or at it the
// Hamiltonian has imaginary-axis eigenvalues and
// NoStabilizingSolutionError is thrown.
AreSolution solve_care_hinf(const ClosedLoop& cl, double beta);

struct LqrSolution {
  Eigen::MatrixXd P;
  Gain gain;                   // K = -R^{-1} B' P, so A + B K is Hurwitz
  double residual_norm = 0.0;
};

// Stabilizing solution of A' P + P A + Q - P B R^{-1} B' P = 0 with the
// associated regulator gain. Requires (A, B) stabilizable, Q PSD, R PD.
LqrSolution solve_care_lqr(const Eigen::Ref<const Eigen::MatrixXd>& A,
                           const Eigen::Ref<const Eigen::MatrixXd>& B,
                           const Eigen::Ref<const Eigen::MatrixXd>& Q,
                           const Eigen::Ref<const Eigen::MatrixXd>& R);

// Frobenius norm of the level-beta Riccati residual at a candidate P.
double are_residual(const ClosedLoop& cl, double beta,
                    const Eigen::Ref<const Eigen::MatrixXd>& P);

}  // namespace hinfsyn
