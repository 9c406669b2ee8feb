#include "hinfsyn/demo_systems.hpp"

#include <algorithm>

#include "hinfsyn/errors.hpp"

namespace hinfsyn {

Plant chained_mass_plant(Eigen::Index masses) {
  if (masses < 1) {
    throw InvalidArgumentError("chained_mass_plant needs at least one mass");
  }
  const Eigen::Index N = masses;
  const Eigen::Index n = 2 * N;

  // Fixed-free stiffness: each mass couples to its neighbors, the first
  // also to the wall.
  Eigen::MatrixXd stiffness = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    stiffness(i, i) = (i + 1 < N) ? 2.0 : 1.0;
    if (i + 1 < N) {
      stiffness(i, i + 1) = -1.0;
      stiffness(i + 1, i) = -1.0;
    }
  }
  Eigen::VectorXd damping(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    damping(i) = 0.4 + 0.4 * static_cast<double>(i) /
                           static_cast<double>(std::max<Eigen::Index>(N - 1, 1));
  }

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  A.topRightCorner(N, N) = Eigen::MatrixXd::Identity(N, N);
  A.bottomLeftCorner(N, N) = -stiffness;
  A.bottomRightCorner(N, N) = -damping.asDiagonal().toDenseMatrix();

  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, 1);
  B(n - 1, 0) = 1.0;  // force on the last mass
  Eigen::MatrixXd B1 = Eigen::MatrixXd::Zero(n, 1);
  B1(N, 0) = 1.0;  // disturbance force on the first mass

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(2, n);
  C(0, N - 1) = 1.0;  // last mass's position
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(2, 1);
  D(1, 0) = 0.1;

  return Plant(std::move(A), std::move(B), std::move(B1), std::move(C),
               std::move(D));
}

}  // namespace hinfsyn
