#pragma once

#include <Eigen/Dense>

#include "hinfsyn/plant.hpp"

namespace hinfsyn {

// Damped spring-mass chain with `masses` unit masses: the first mass is
// anchored to a wall, neighbors are coupled by unit springs, and each mass
// carries its own damper (coefficients ramp from 0.4 to 0.8 along the
// chain). The control forces the last mass, the disturbance forces the
// first, and the performance output is the last mass's position plus a
// 0.1-weighted control effort term. State dimension is 2 * masses and the
// open loop is Hurwitz, so K = 0 is a valid stabilizing gain.
//
// The family exists to exercise the solvers at controllable sizes: the
// stiffness coupling keeps the Schur and bisection work honest while every
// instance stays deterministic.
Plant chained_mass_plant(Eigen::Index masses);

}  // namespace hinfsyn
