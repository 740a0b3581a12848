// Copyright 2026 The Skatekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKATEKIT_BOARD_DYNAMICS_HPP_
#define SKATEKIT_BOARD_DYNAMICS_HPP_

#include <iosfwd>
#include <vector>

#include "skatekit/free_decay.hpp"
#include "skatekit/truck_kinematics.hpp"

namespace skatekit {

// Deck tilt hinge range (rad), symmetric about zero.
inline constexpr double kBoardTiltLimit = 0.2;

// Planar board state under the bicycle model: yaw rate
// psi_dot = (v / L) * tan(sigma) with sigma induced by the deck tilt.
struct BoardState {
  double x = 0.0;          // m
  double y = 0.0;          // m
  double heading = 0.0;    // psi, wrapped to (-pi, pi]
  double speed = 0.0;      // v, m/s, >= 0
  double tilt = 0.0;       // gamma, rad
  double tilt_rate = 0.0;  // rad/s
};

// Equivalent torsional spring-damper for the passive deck tilt:
//   inertia * tilt_dotdot = -stiffness * tilt - damping * tilt_rate + torque.
struct TiltModel {
  double inertia = 7.15e-3;   // kg m^2
  double stiffness = 34.835;  // N m / rad
  double damping = 0.540;     // N m s / rad

  double natural_frequency() const;  // sqrt(k / I), rad/s
  double damping_ratio() const;      // d / (2 sqrt(k I))
  // 2 pi / damped frequency; throws std::domain_error unless underdamped.
  double damped_period() const;
};

// Throws std::domain_error unless all parameters are strictly positive.
void validate(const TiltModel& model);

// Advances position and heading over one step with the tilt command held
// constant: psi_dot = (v / L) tan(rake) sin(gamma), x_dot = v cos(psi),
// y_dot = v sin(psi), integrated with classic fourth-order Runge-Kutta.
// Speed is carried through unchanged (propulsion is an external input);
// the returned state stores gamma_command as its tilt.
BoardState step_planar(const BoardState& state, double gamma_command,
                       const TruckGeometry& geom, double dt);

struct TiltStep {
  double tilt = 0.0;
  double tilt_rate = 0.0;
};

// One semi-implicit Euler step of the tilt spring-damper. The tilt is
// clamped to +-tilt_limit and the outward rate is zeroed at the stops.
TiltStep step_tilt(double tilt, double tilt_rate, const TiltModel& model,
                   double external_torque, double dt,
                   double tilt_limit = kBoardTiltLimit);

// Perturb-and-release roll response sampled at dt: release from rest at
// tilt0, no external torque, no hinge stops. Evaluates the closed-form
// solution of the linear model, so the trace is exact at the sample times.
// Throws std::domain_error if the model is not underdamped (no peaks to
// identify) and std::invalid_argument unless the duration covers at least
// two oscillation periods.
FreeDecayTrace simulate_free_decay(const TiltModel& model, double tilt0,
                                   double duration, double dt);

struct TrajectorySample {
  double t = 0.0;
  BoardState state;
  double sigma = 0.0;  // truck steering angle at this sample
};

// Uniformly sampled board trajectory.
struct Trajectory {
  double dt = 0.0;
  std::vector<TrajectorySample> samples;
};

// CSV with header "t,x,y,psi,v,gamma,gamma_rate,sigma"; values use
// shortest round-trip decimal formatting.
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

}  // namespace skatekit

#endif  // SKATEKIT_BOARD_DYNAMICS_HPP_
