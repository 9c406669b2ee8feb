#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

// Linear time-invariant plant
//
//   xdot = A x + B u + B1 w,     z = C x + D u,
//
// controlled by static state feedback u = K x, with w the disturbance and z
// the performance output. Dimensions: A is n x n, B is n x m, B1 is n x m1,
// C is r x n, D is r x m. Construction validates shapes and finiteness and
// throws DimensionError / NonFiniteError naming the offending matrix; the
// object is immutable afterwards.
//
// Stabilizability of (A, B) and (A, B1) and detectability of (A, C) are
// checked at construction but only recorded as warnings(); synthesize()
// re-checks the first two as hard errors, since gradient descent cannot work
// without them.
class Plant {
 public:
  Plant(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd B1,
        Eigen::MatrixXd C, Eigen::MatrixXd D);

  const Eigen::MatrixXd& A() const noexcept { return A_; }
  const Eigen::MatrixXd& B() const noexcept { return B_; }
  const Eigen::MatrixXd& B1() const noexcept { return B1_; }
  const Eigen::MatrixXd& C() const noexcept { return C_; }
  const Eigen::MatrixXd& D() const noexcept { return D_; }

  Eigen::Index n() const noexcept { return A_.rows(); }
  Eigen::Index m() const noexcept { return B_.cols(); }
  Eigen::Index m1() const noexcept { return B1_.cols(); }
  Eigen::Index r() const noexcept { return C_.rows(); }

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  Eigen::MatrixXd A_, B_, B1_, C_, D_;
  std::vector<std::string> warnings_;
};

Plant make_plant(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd B1,
                 Eigen::MatrixXd C, Eigen::MatrixXd D);

// Static state-feedback gain u = K x, with K of shape m x n.
struct Gain {
  Eigen::MatrixXd K;
};

// Plant under a fixed gain: Ac = A + B K, C1 = C + D K, so the closed-loop
// disturbance-to-output map is G(s) = C1 (sI - Ac)^{-1} B1.
struct ClosedLoop {
  Plant plant;
  Gain gain;
  Eigen::MatrixXd Ac;
  Eigen::MatrixXd C1;
};

ClosedLoop closed_loop(const Plant& plant, const Gain& gain);

// True when every eigenvalue of M satisfies Re(lambda) < -tol_re. The
// single-argument overload uses the scale-relative margin
// tol_re = 1e-9 * (1 + ||M||_F).
bool is_hurwitz(const Eigen::Ref<const Eigen::MatrixXd>& M, double tol_re);
bool is_hurwitz(const Eigen::Ref<const Eigen::MatrixXd>& M);

// PBH rank tests. For every eigenvalue of A with Re(lambda) >= 0 the pencil
// [A - lambda I, B] must have full row rank, judged against singular values:
// sigma_min > tol_rank * sigma_max. check_detectable is the dual test on
// (A', C').
bool check_stabilizable(const Eigen::Ref<const Eigen::MatrixXd>& A,
                        const Eigen::Ref<const Eigen::MatrixXd>& B,
                        double tol_rank = 1e-10);
bool check_detectable(const Eigen::Ref<const Eigen::MatrixXd>& A,
                      const Eigen::Ref<const Eigen::MatrixXd>& C,
                      double tol_rank = 1e-10);

// Largest singular value of the closed-loop frequency response
// C1 (j*omega*I - Ac)^{-1} B1. Throws PoleAtFrequencyError when j*omega is
// (numerically) an eigenvalue of Ac.
double sigma_max_response(const ClosedLoop& cl, double omega);

}  // namespace hinfsyn
