#pragma once

#include <Eigen/Dense>

// Thin wrappers around the LAPACK routines the solvers are built on. All
// matrices are dense column-major doubles, which matches Eigen's default
// layout, so buffers are passed straight through.
namespace hinfsyn::detail {

// Eigenvalues of a general real matrix (dgeev, no eigenvectors).
Eigen::VectorXcd spectrum(const Eigen::MatrixXd& M);

struct SchurDecomposition {
  Eigen::MatrixXd T;             // quasi-triangular factor, M = U T U'
  Eigen::MatrixXd U;             // orthogonal Schur vectors
  Eigen::VectorXcd eigenvalues;
};

// Unordered real Schur form (dgees).
SchurDecomposition real_schur(const Eigen::MatrixXd& M);

struct StableSubspace {
  Eigen::MatrixXd basis;   // orthonormal; the invariant subspace for the
                           // eigenvalues with Re(lambda) < 0 spans the first
                           // `count` columns
  Eigen::Index count;
};

// Ordered real Schur form with the Re(lambda) < 0 eigenvalues moved to the
// leading block (dgees with a sort callback).
StableSubspace stable_invariant_subspace(const Eigen::MatrixXd& M);

// Solves T Y + Y T' = C for quasi-triangular T (dtrsyl).
Eigen::MatrixXd solve_quasi_triangular_sylvester(const Eigen::MatrixXd& T,
                                                 const Eigen::MatrixXd& C);

}  // namespace hinfsyn::detail
