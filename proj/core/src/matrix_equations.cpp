#include "hinfsyn/matrix_equations.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "hinfsyn/hinf_norm.hpp"
#include "lapack_support.hpp"

namespace hinfsyn {

namespace {

void require_symmetric(const char* name, const Eigen::MatrixXd& M) {
  const double skew = (M - M.transpose()).norm();
  if (skew > 1e-12 * (1.0 + M.norm())) {
    std::ostringstream os;
    os << name << " must be symmetric; ||" << name << " - " << name
       << "'|| = " << skew;
    throw InvalidArgumentError(os.str());
  }
}

// Stabilizing solution of A' P + P A + Q + P S P = 0 from the stable
// invariant subspace of the Hamiltonian [[A, S], [-Q, -A']]. The caller is
// responsible for the sign convention in S.
Eigen::MatrixXd stabilizing_riccati(const Eigen::MatrixXd& A,
                                    const Eigen::MatrixXd& S,
                                    const Eigen::MatrixXd& Q,
                                    const char* context) {
  const Eigen::Index n = A.rows();
  Eigen::MatrixXd H(2 * n, 2 * n);
  H.topLeftCorner(n, n) = A;
  H.topRightCorner(n, n) = S;
  H.bottomLeftCorner(n, n) = -Q;
  H.bottomRightCorner(n, n) = -A.transpose();

  // Same tolerance as the norm bisection, so "degenerate level" means the
  // same thing to both modules.
  if (has_imaginary_axis_eig(H)) {
    throw NoStabilizingSolutionError(
        std::string(context) +
        ": Hamiltonian has imaginary-axis eigenvalues, no stabilizing "
        "solution exists at this level");
  }

  const detail::StableSubspace sub = detail::stable_invariant_subspace(H);
  if (sub.count != n) {
    std::ostringstream os;
    os << context << ": stable invariant subspace has dimension " << sub.count
       << ", expected " << n << "; no stabilizing solution at this level";
    throw NoStabilizingSolutionError(os.str());
  }

  const Eigen::MatrixXd X11 = sub.basis.topLeftCorner(n, n);
  const Eigen::MatrixXd X21 = sub.basis.bottomLeftCorner(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(X11.transpose());
  if (!lu.isInvertible()) {
    throw SubspaceExtractionError(
        std::string(context) +
        ": leading block of the stable subspace basis is singular; the "
        "solution cannot be extracted");
  }
  Eigen::MatrixXd P = lu.solve(X21.transpose()).transpose();
  P = 0.5 * (P + P.transpose());

  // Tiny negative eigenvalues are rounding artifacts of the subspace
  // extraction; clamp them to zero. Anything materially negative means the
  // solution is genuinely indefinite.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(P);
  if (es.info() != Eigen::Success) {
    throw NumericalError(std::string(context) +
                         ": eigendecomposition of the candidate solution failed");
  }
  const double tol_psd = 1e-8 * (1.0 + P.norm());
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol_psd) {
    std::ostringstream os;
    os << context << ": computed solution is indefinite (min eigenvalue "
       << min_eig << "); no stabilizing PSD solution at this level";
    throw NoStabilizingSolutionError(os.str());
  }
  if (min_eig < 0.0) {
    P = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).asDiagonal() *
        es.eigenvectors().transpose();
    P = 0.5 * (P + P.transpose());
  }
  return P;
}

}  // namespace

LyapunovSolution solve_lyapunov(const Eigen::Ref<const Eigen::MatrixXd>& A1,
                                const Eigen::Ref<const Eigen::MatrixXd>& Q) {
  if (A1.rows() == 0 || A1.rows() != A1.cols()) {
    throw DimensionError("A1 must be square and nonempty");
  }
  if (Q.rows() != A1.rows() || Q.cols() != A1.cols()) {
    std::ostringstream os;
    os << "Q must be " << A1.rows() << "x" << A1.rows() << " to match A1, got "
       << Q.rows() << "x" << Q.cols();
    throw DimensionError(os.str());
  }
  if (!A1.allFinite() || !Q.allFinite()) {
    throw NonFiniteError("solve_lyapunov inputs must be finite");
  }
  const Eigen::MatrixXd Qd = Q;
  require_symmetric("Q", Qd);

  const detail::SchurDecomposition schur = detail::real_schur(A1);

  // The Lyapunov operator L -> A1 L + L A1' has spectrum
  // {lambda_i + lambda_j}; a pair summing to zero makes it singular.
  double top = 0.0;
  for (Eigen::Index i = 0; i < schur.eigenvalues.size(); ++i) {
    top = std::max(top, std::abs(schur.eigenvalues(i)));
  }
  const double tol_pair = 1e-10 * (1.0 + top);
  for (Eigen::Index i = 0; i < schur.eigenvalues.size(); ++i) {
    for (Eigen::Index j = i; j < schur.eigenvalues.size(); ++j) {
      if (std::abs(schur.eigenvalues(i) + schur.eigenvalues(j)) <= tol_pair) {
        std::ostringstream os;
        os << "equation is ill posed: eigenvalues of A1 at indices " << i
           << " and " << j << " sum to (numerically) zero";
        throw IllPosedEquationError(os.str());
      }
    }
  }

  const Eigen::MatrixXd Qt = schur.U.transpose() * Qd * schur.U;
  const Eigen::MatrixXd Y =
      detail::solve_quasi_triangular_sylvester(schur.T, -Qt);
  Eigen::MatrixXd L = schur.U * Y * schur.U.transpose();
  L = 0.5 * (L + L.transpose());

  LyapunovSolution out;
  out.residual_norm = (A1 * L + L * A1.transpose() + Qd).norm();
  if (out.residual_norm > 1e-8 * (1.0 + L.norm())) {
    std::ostringstream os;
    os << "Lyapunov residual " << out.residual_norm
       << " exceeds its tolerance; the solve is numerically unreliable";
    throw NumericalError(os.str());
  }
  out.L = std::move(L);
  return out;
}

AreSolution solve_care_hinf(const ClosedLoop& cl, double beta) {
  if (!(beta > 0) || !std::isfinite(beta)) {
    throw InvalidArgumentError("beta must be positive and finite");
  }
  const Eigen::MatrixXd S =
      cl.plant.B1() * cl.plant.B1().transpose() / beta;
  const Eigen::MatrixXd Q = cl.C1.transpose() * cl.C1;

  AreSolution out;
  out.P = stabilizing_riccati(cl.Ac, S, Q, "solve_care_hinf");
  out.A1 = cl.Ac + S * out.P;
  if (!is_hurwitz(out.A1)) {
    throw NoStabilizingSolutionError(
        "solve_care_hinf: closed Hamiltonian dynamics are not Hurwitz; beta "
        "is at or below the critical level");
  }
  out.residual_norm = are_residual(cl, beta, out.P);
  if (out.residual_norm > 1e-8 * (1.0 + out.P.squaredNorm())) {
    std::ostringstream os;
    os << "solve_care_hinf: residual " << out.residual_norm
       << " exceeds its tolerance; the solve is numerically unreliable";
    throw NumericalError(os.str());
  }
  return out;
}

LqrSolution solve_care_lqr(const Eigen::Ref<const Eigen::MatrixXd>& A,
                           const Eigen::Ref<const Eigen::MatrixXd>& B,
                           const Eigen::Ref<const Eigen::MatrixXd>& Q,
                           const Eigen::Ref<const Eigen::MatrixXd>& R) {
  if (A.rows() == 0 || A.rows() != A.cols()) {
    throw DimensionError("A must be square and nonempty");
  }
  const Eigen::Index n = A.rows();
  if (B.rows() != n || B.cols() == 0) {
    std::ostringstream os;
    os << "B must be " << n << " x m with m >= 1, got " << B.rows() << "x"
       << B.cols();
    throw DimensionError(os.str());
  }
  const Eigen::Index m = B.cols();
  if (Q.rows() != n || Q.cols() != n) {
    throw DimensionError("Q must match A");
  }
  if (R.rows() != m || R.cols() != m) {
    throw DimensionError("R must be m x m to match B");
  }
  if (!A.allFinite() || !B.allFinite() || !Q.allFinite() || !R.allFinite()) {
    throw NonFiniteError("solve_care_lqr inputs must be finite");
  }
  const Eigen::MatrixXd Qd = Q, Rd = R;
  require_symmetric("Q", Qd);
  require_symmetric("R", Rd);
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Qd, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * (1.0 + Qd.norm())) {
      throw InvalidArgumentError("Q must be positive semidefinite");
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(Rd);
  if (llt.info() != Eigen::Success) {
    throw InvalidArgumentError("R must be positive definite");
  }
  if (!check_stabilizable(A, B)) {
    throw AssumptionError(
        "(A, B) is not stabilizable; no stabilizing regulator gain exists");
  }

  const Eigen::MatrixXd S = -B * llt.solve(B.transpose());
  LqrSolution out;
  out.P = stabilizing_riccati(A, S, Qd, "solve_care_lqr");
  out.gain.K = -llt.solve(B.transpose() * out.P);
  if (!is_hurwitz(A + B * out.gain.K)) {
    throw NoStabilizingSolutionError(
        "solve_care_lqr: regulator closed loop is not Hurwitz; the problem "
        "data admit no stabilizing solution");
  }
  out.residual_norm =
      (A.transpose() * out.P + out.P * A + Qd + out.P * S * out.P).norm();
  if (out.residual_norm > 1e-8 * (1.0 + out.P.squaredNorm())) {
    std::ostringstream os;
    os << "solve_care_lqr: residual " << out.residual_norm
       << " exceeds its tolerance; the solve is numerically unreliable";
    throw NumericalError(os.str());
  }
  return out;
}

double are_residual(const ClosedLoop& cl, double beta,
                    const Eigen::Ref<const Eigen::MatrixXd>& P) {
  if (!(beta > 0) || !std::isfinite(beta)) {
    throw InvalidArgumentError("beta must be positive and finite");
  }
  const Eigen::Index n = cl.Ac.rows();
  if (P.rows() != n || P.cols() != n) {
    throw DimensionError("P must match the closed-loop state dimension");
  }
  const Eigen::MatrixXd B1 = cl.plant.B1();
  return (cl.Ac.transpose() * P + P * cl.Ac + cl.C1.transpose() * cl.C1 +
          P * B1 * B1.transpose() * P / beta)
      .norm();
}

}  // namespace hinfsyn
