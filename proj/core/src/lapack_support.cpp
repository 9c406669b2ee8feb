#include "lapack_support.hpp"

#include <lapacke.h>

#include <string>

#include "hinfsyn/errors.hpp"

namespace hinfsyn::detail {

namespace {

lapack_logical negative_real_part(const double* re, const double* /*im*/) {
  return *re < 0.0 ? 1 : 0;
}

Eigen::VectorXcd combine(const Eigen::VectorXd& wr, const Eigen::VectorXd& wi) {
  Eigen::VectorXcd eigs(wr.size());
  for (Eigen::Index i = 0; i < wr.size(); ++i) {
    eigs(i) = std::complex<double>(wr(i), wi(i));
  }
  return eigs;
}

}  // namespace

Eigen::VectorXcd spectrum(const Eigen::MatrixXd& M) {
  const lapack_int n = static_cast<lapack_int>(M.rows());
  Eigen::MatrixXd work = M;  // dgeev destroys its input
  Eigen::VectorXd wr(n), wi(n);
  const lapack_int info =
      LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n, wr.data(),
                    wi.data(), nullptr, 1, nullptr, 1);
  if (info != 0) {
    throw NumericalError("eigenvalue computation failed (dgeev info = " +
                         std::to_string(info) + ")");
  }
  return combine(wr, wi);
}

SchurDecomposition real_schur(const Eigen::MatrixXd& M) {
  const lapack_int n = static_cast<lapack_int>(M.rows());
  SchurDecomposition out;
  out.T = M;
  out.U.resize(n, n);
  Eigen::VectorXd wr(n), wi(n);
  lapack_int sdim = 0;
  const lapack_int info =
      LAPACKE_dgees(LAPACK_COL_MAJOR, 'V', 'N', nullptr, n, out.T.data(), n,
                    &sdim, wr.data(), wi.data(), out.U.data(), n);
  if (info != 0) {
    throw NumericalError("Schur decomposition failed (dgees info = " +
                         std::to_string(info) + ")");
  }
  out.eigenvalues = combine(wr, wi);
  return out;
}

StableSubspace stable_invariant_subspace(const Eigen::MatrixXd& M) {
  const lapack_int n = static_cast<lapack_int>(M.rows());
  Eigen::MatrixXd T = M;
  Eigen::MatrixXd U(n, n);
  Eigen::VectorXd wr(n), wi(n);
  lapack_int sdim = 0;
  const lapack_int info =
      LAPACKE_dgees(LAPACK_COL_MAJOR, 'V', 'S', &negative_real_part, n,
                    T.data(), n, &sdim, wr.data(), wi.data(), U.data(), n);
  if (info != 0) {
    if (info == n + 1 || info == n + 2) {
      throw SubspaceExtractionError(
          "eigenvalue reordering is ill-conditioned; the stable subspace "
          "cannot be separated reliably (dgees info = " +
          std::to_string(info) + ")");
    }
    throw NumericalError("ordered Schur decomposition failed (dgees info = " +
                         std::to_string(info) + ")");
  }
  return {std::move(U), static_cast<Eigen::Index>(sdim)};
}

Eigen::MatrixXd solve_quasi_triangular_sylvester(const Eigen::MatrixXd& T,
                                                 const Eigen::MatrixXd& C) {
  const lapack_int n = static_cast<lapack_int>(T.rows());
  Eigen::MatrixXd X = C;
  double scale = 1.0;
  const lapack_int info =
      LAPACKE_dtrsyl(LAPACK_COL_MAJOR, 'N', 'T', 1, n, n, T.data(), n,
                     T.data(), n, X.data(), n, &scale);
  if (info == 1) {
    throw IllPosedEquationError(
        "the equation has nearly singular eigenvalue pairing; the "
        "triangular solve had to perturb it (dtrsyl info = 1)");
  }
  if (info != 0) {
    throw NumericalError("triangular Sylvester solve failed (dtrsyl info = " +
                         std::to_string(info) + ")");
  }
  if (scale != 1.0) {
    X /= scale;
  }
  return X;
}

}  // namespace hinfsyn::detail
