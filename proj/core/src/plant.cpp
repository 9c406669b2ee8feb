#include "hinfsyn/plant.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <utility>

#include "lapack_support.hpp"

namespace hinfsyn {

namespace {

void require_finite(const char* name, const Eigen::MatrixXd& M) {
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (!std::isfinite(M(i, j))) {
        std::ostringstream os;
        os << name << "(" << i << ", " << j << ") is not finite";
        throw NonFiniteError(os.str());
      }
    }
  }
}

void require_square(const char* name, const Eigen::MatrixXd& M) {
  if (M.rows() == 0 || M.rows() != M.cols()) {
    std::ostringstream os;
    os << name << " must be square and nonempty, got " << M.rows() << "x"
       << M.cols();
    throw DimensionError(os.str());
  }
}

}  // namespace

Plant::Plant(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd B1,
             Eigen::MatrixXd C, Eigen::MatrixXd D)
    : A_(std::move(A)),
      B_(std::move(B)),
      B1_(std::move(B1)),
      C_(std::move(C)),
      D_(std::move(D)) {
  require_square("A", A_);
  const Eigen::Index n = A_.rows();

  std::ostringstream os;
  if (B_.rows() != n || B_.cols() == 0) {
    os << "B must be " << n << " x m with m >= 1 to match A (" << n << "x" << n
       << "), got " << B_.rows() << "x" << B_.cols();
    throw DimensionError(os.str());
  }
  if (B1_.rows() != n || B1_.cols() == 0) {
    os << "B1 must be " << n << " x m1 with m1 >= 1 to match A (" << n << "x"
       << n << "), got " << B1_.rows() << "x" << B1_.cols();
    throw DimensionError(os.str());
  }
  if (C_.cols() != n || C_.rows() == 0) {
    os << "C must be r x " << n << " with r >= 1 to match A (" << n << "x" << n
       << "), got " << C_.rows() << "x" << C_.cols();
    throw DimensionError(os.str());
  }
  if (D_.rows() != C_.rows() || D_.cols() != B_.cols()) {
    os << "D must be " << C_.rows() << "x" << B_.cols()
       << " to match C and B, got " << D_.rows() << "x" << D_.cols();
    throw DimensionError(os.str());
  }

  require_finite("A", A_);
  require_finite("B", B_);
  require_finite("B1", B1_);
  require_finite("C", C_);
  require_finite("D", D_);

  // Advisory only; synthesize() re-checks the first two as hard errors.
  if (!check_stabilizable(A_, B_)) {
    warnings_.push_back("(A, B) is not stabilizable; synthesis will refuse this plant");
  }
  if (!check_detectable(A_, C_)) {
    warnings_.push_back("(A, C) is not detectable; synthesis will refuse this plant");
  }
  if (!check_stabilizable(A_, B1_)) {
    warnings_.push_back("(A, B1) is not stabilizable; the disturbance channel cannot excite some unstable modes");
  }
}

Plant make_plant(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd B1,
                 Eigen::MatrixXd C, Eigen::MatrixXd D) {
  return Plant(std::move(A), std::move(B), std::move(B1), std::move(C),
               std::move(D));
}

ClosedLoop closed_loop(const Plant& plant, const Gain& gain) {
  if (gain.K.rows() != plant.m() || gain.K.cols() != plant.n()) {
    std::ostringstream os;
    os << "K must be " << plant.m() << "x" << plant.n()
       << " to close the loop, got " << gain.K.rows() << "x" << gain.K.cols();
    throw DimensionError(os.str());
  }
  require_finite("K", gain.K);
  ClosedLoop cl{plant, gain, plant.A() + plant.B() * gain.K,
                plant.C() + plant.D() * gain.K};
  return cl;
}

bool is_hurwitz(const Eigen::Ref<const Eigen::MatrixXd>& M, double tol_re) {
  if (M.rows() == 0 || M.rows() != M.cols()) {
    throw DimensionError("is_hurwitz needs a square nonempty matrix");
  }
  if (!std::isfinite(tol_re) || tol_re < 0) {
    throw InvalidArgumentError("is_hurwitz tolerance must be finite and nonnegative");
  }
  const Eigen::VectorXcd eigs = detail::spectrum(M);
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    if (eigs(i).real() >= -tol_re) {
      return false;
    }
  }
  return true;
}

bool is_hurwitz(const Eigen::Ref<const Eigen::MatrixXd>& M) {
  return is_hurwitz(M, 1e-9 * (1.0 + M.norm()));
}

bool check_stabilizable(const Eigen::Ref<const Eigen::MatrixXd>& A,
                        const Eigen::Ref<const Eigen::MatrixXd>& B,
                        double tol_rank) {
  if (A.rows() == 0 || A.rows() != A.cols()) {
    throw DimensionError("check_stabilizable needs a square nonempty A");
  }
  if (B.rows() != A.rows()) {
    std::ostringstream os;
    os << "B must have " << A.rows() << " rows to match A, got " << B.rows();
    throw DimensionError(os.str());
  }
  if (!(tol_rank > 0) || !std::isfinite(tol_rank)) {
    throw InvalidArgumentError("rank tolerance must be positive and finite");
  }

  const Eigen::Index n = A.rows();
  const Eigen::VectorXcd eigs = detail::spectrum(A);
  Eigen::MatrixXcd pencil(n, n + B.cols());
  for (Eigen::Index k = 0; k < eigs.size(); ++k) {
    // Conjugate eigenvalues give the same singular values, so test one of
    // each pair; stable modes need no control authority at all.
    if (eigs(k).real() < 0.0 || eigs(k).imag() < 0.0) {
      continue;
    }
    pencil.leftCols(n) = A.cast<std::complex<double>>();
    pencil.leftCols(n).diagonal().array() -= eigs(k);
    pencil.rightCols(B.cols()) = B.cast<std::complex<double>>();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pencil);
    const auto& sv = svd.singularValues();
    if (sv(0) <= 0.0 || sv(n - 1) <= tol_rank * sv(0)) {
      return false;
    }
  }
  return true;
}

bool check_detectable(const Eigen::Ref<const Eigen::MatrixXd>& A,
                      const Eigen::Ref<const Eigen::MatrixXd>& C,
                      double tol_rank) {
  if (C.cols() != A.rows()) {
    std::ostringstream os;
    os << "C must have " << A.rows() << " columns to match A, got " << C.cols();
    throw DimensionError(os.str());
  }
  return check_stabilizable(A.transpose(), C.transpose(), tol_rank);
}

double sigma_max_response(const ClosedLoop& cl, double omega) {
  if (!std::isfinite(omega)) {
    throw InvalidArgumentError("frequency must be finite");
  }
  Eigen::MatrixXcd resolvent = -cl.Ac.cast<std::complex<double>>();
  resolvent.diagonal().array() += std::complex<double>(0.0, omega);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(resolvent);
  if (!lu.isInvertible()) {
    std::ostringstream os;
    os << "closed loop has a pole at frequency omega = " << omega
       << "; the response is unbounded there";
    throw PoleAtFrequencyError(os.str());
  }
  const Eigen::MatrixXcd G =
      cl.C1.cast<std::complex<double>>() *
      lu.solve(cl.plant.B1().cast<std::complex<double>>());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G);
  return svd.singularValues()(0);
}

}  // namespace hinfsyn
