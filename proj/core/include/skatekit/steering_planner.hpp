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

#ifndef SKATEKIT_STEERING_PLANNER_HPP_
#define SKATEKIT_STEERING_PLANNER_HPP_

#include "skatekit/truck_kinematics.hpp"

namespace skatekit {

struct SteeringCommand {
  double target_heading = 0.0;  // psi target (rad)
  double horizon = 2.7;         // delta-t over which to realize the turn (s)
  double min_speed_clip = 0.3;  // lower speed clip (m/s)
  // Max |tilt reference| (rad); 0 disables turning altogether.
  double lean_limit = 0.2;
};

// Throws std::domain_error unless horizon > 0, min_speed_clip > 0 and
// 0 <= lean_limit <= board tilt range.
void validate(const SteeringCommand& cmd);

// Heading error wrapped to (-pi, pi].
double heading_error(double psi_target, double psi_current);

// Deck tilt that turns the board by delta_psi over cmd.horizon at constant
// yaw rate: gamma_ref = asin(L * delta_psi / (v * dt * tan(rake))).
// Total by construction: speed is clipped up to min_speed_clip, the asin
// argument is clamped to [-1, 1], and the result is clamped to the lean
// limit. Sign always matches delta_psi.
double tilt_reference(double delta_psi, double speed,
                      const SteeringCommand& cmd, const TruckGeometry& geom);

struct HeadingRange {
  double min = 0.0;
  double max = 0.0;
};

// Headings reachable by holding the lean limit for steer_duration seconds:
// +-(v / L) tan(rake) sin(lean_limit) * steer_duration.
HeadingRange reachable_heading_range(double speed, double steer_duration,
                                     const SteeringCommand& cmd,
                                     const TruckGeometry& geom);

}  // namespace skatekit

#endif  // SKATEKIT_STEERING_PLANNER_HPP_
