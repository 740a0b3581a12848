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

#include "skatekit/phase_schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace skatekit {

std::string_view to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::kPushing: return "pushing";
    case PhaseKind::kMountTransition: return "mount_transition";
    case PhaseKind::kSteering: return "steering";
    case PhaseKind::kDismountTransition: return "dismount_transition";
  }
  throw std::invalid_argument("unknown phase kind");
}

double PhaseSchedule::phase_duration(PhaseKind kind) const {
  return cycle * fractions[static_cast<int>(kind)];
}

double PhaseSchedule::phase_start(PhaseKind kind) const {
  double at = 0.0;
  for (int i = 0; i < static_cast<int>(kind); ++i) at += fractions[i];
  return cycle * at;
}

void validate(const PhaseSchedule& schedule) {
  if (!(schedule.cycle > 0.0)) {
    throw std::domain_error("phase schedule: cycle must be positive");
  }
  double sum = 0.0;
  for (double f : schedule.fractions) {
    if (!(f >= 0.0)) {
      throw std::domain_error("phase schedule: fractions must be non-negative");
    }
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::domain_error("phase schedule: fractions must sum to 1");
  }
}

PhaseState phase_state(double t, const PhaseSchedule& schedule) {
  validate(schedule);
  if (!(t >= 0.0)) {
    throw std::domain_error("phase_state: time must be non-negative");
  }

  const double phi = std::fmod(t, schedule.cycle) / schedule.cycle;
  const double push_end = schedule.fractions[0];
  const double mount_end = push_end + schedule.fractions[1];
  const double steer_end = mount_end + schedule.fractions[2];

  PhaseKind kind;
  if (phi < push_end) {
    kind = PhaseKind::kPushing;
  } else if (phi < mount_end) {
    kind = PhaseKind::kMountTransition;
  } else if (phi < steer_end) {
    kind = PhaseKind::kSteering;
  } else {
    kind = PhaseKind::kDismountTransition;
  }
  return {phi, kind};
}

double dispatch_reward(PhaseKind kind, double r_push, double r_steer,
                       double r_trans, double r_reg) {
  switch (kind) {
    case PhaseKind::kPushing: return r_push + r_reg;
    case PhaseKind::kSteering: return r_steer + r_reg;
    case PhaseKind::kMountTransition:
    case PhaseKind::kDismountTransition: return r_trans + r_reg;
  }
  throw std::invalid_argument("unknown phase kind");
}

}  // namespace skatekit
