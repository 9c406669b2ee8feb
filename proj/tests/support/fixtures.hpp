#pragma once

#include <Eigen/Dense>

#include "hinfsyn/plant.hpp"

namespace testsupport {

// 1/(s+1) with the disturbance on the state and z = [x; u]: the smallest
// plant on which every closed form below can be worked out by hand.
inline hinfsyn::Plant scalar_plant() {
  Eigen::MatrixXd A(1, 1), B(1, 1), B1(1, 1), C(2, 1), D(2, 1);
  A << -1.0;
  B << 1.0;
  B1 << 1.0;
  C << 1.0, 0.0;
  D << 0.0, 1.0;
  return hinfsyn::Plant(A, B, B1, C, D);
}

// Two-state uncertain system with full-state disturbance and z = [x; u];
// the norms of the two gains below are known to four decimals and anchor
// the certification tests.
inline hinfsyn::Plant sample_2x2_plant() {
  Eigen::MatrixXd A(2, 2), B(2, 2), B1(2, 2), C(4, 2), D(4, 2);
  A << 0.2229, 0.5637,
       0.8708, 0.9984;
  B << 0.5254, 0.6644,
       0.3872, 0.9145;
  B1 = Eigen::MatrixXd::Identity(2, 2);
  C << 1.0, 0.0,
       0.0, 1.0,
       0.0, 0.0,
       0.0, 0.0;
  D << 0.0, 0.0,
       0.0, 0.0,
       1.0, 0.0,
       0.0, 1.0;
  return hinfsyn::Plant(A, B, B1, C, D);
}

// Reference design for the sample plant; closed-loop norm 2.6947.
inline hinfsyn::Gain reference_gain_2x2() {
  Eigen::MatrixXd K(2, 2);
  K << -0.9643, -2.1060,
       -0.2088, -5.6843;
  return hinfsyn::Gain{K};
}

// Optimized design for the same plant; closed-loop norm 2.6736.
inline hinfsyn::Gain optimized_gain_2x2() {
  Eigen::MatrixXd K(2, 2);
  K << -0.8426, -0.9893,
       -0.0551, -2.5743;
  return hinfsyn::Gain{K};
}

constexpr double kReferenceGamma2x2 = 2.6947;
constexpr double kOptimizedGamma2x2 = 2.6736;

}  // namespace testsupport
