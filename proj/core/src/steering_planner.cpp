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

#include "skatekit/steering_planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "skatekit/board_dynamics.hpp"

namespace skatekit {

void validate(const SteeringCommand& cmd) {
  if (!(cmd.horizon > 0.0)) {
    throw std::domain_error("steering command: horizon must be positive");
  }
  if (!(cmd.min_speed_clip > 0.0)) {
    throw std::domain_error("steering command: min speed clip must be positive");
  }
  if (!(cmd.lean_limit >= 0.0 && cmd.lean_limit <= kBoardTiltLimit)) {
    throw std::domain_error(
        "steering command: lean limit must be in [0, board tilt range]");
  }
}

double heading_error(double psi_target, double psi_current) {
  return wrap_to_pi(psi_target - psi_current);
}

double tilt_reference(double delta_psi, double speed,
                      const SteeringCommand& cmd, const TruckGeometry& geom) {
  validate(cmd);
  validate(geom);

  // Safeguards in order: clip speed, clamp the asin argument, clamp the lean.
  const double v = std::max(speed, cmd.min_speed_clip);
  const double raw = geom.wheelbase * delta_psi /
                     (v * cmd.horizon * std::tan(geom.rake_lambda));
  const double gamma = std::asin(std::clamp(raw, -1.0, 1.0));
  return std::clamp(gamma, -cmd.lean_limit, cmd.lean_limit);
}

HeadingRange reachable_heading_range(double speed, double steer_duration,
                                     const SteeringCommand& cmd,
                                     const TruckGeometry& geom) {
  validate(cmd);
  validate(geom);
  if (!(speed > 0.0)) {
    throw std::domain_error("reachable_heading_range: speed must be positive");
  }
  if (!(steer_duration >= 0.0)) {
    throw std::domain_error(
        "reachable_heading_range: duration must be non-negative");
  }

  // Yaw rate at full lean, held for the whole steering window.
  const double max_rate = (speed / geom.wheelbase) *
                          std::tan(geom.rake_lambda) * std::sin(cmd.lean_limit);
  const double span = max_rate * steer_duration;
  return {-span, span};
}

}  // namespace skatekit
