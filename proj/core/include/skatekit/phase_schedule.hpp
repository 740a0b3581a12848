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

#ifndef SKATEKIT_PHASE_SCHEDULE_HPP_
#define SKATEKIT_PHASE_SCHEDULE_HPP_

#include <array>
#include <string_view>

namespace skatekit {

enum class PhaseKind {
  kPushing,
  kMountTransition,
  kSteering,
  kDismountTransition,
};

std::string_view to_string(PhaseKind kind);

// Clock-driven cycle: phi = (t mod cycle) / cycle selects the phase by
// cumulative fraction boundaries, half-open [lo, hi) so a time landing
// exactly on a boundary belongs to the later phase.
struct PhaseSchedule {
  double cycle = 6.0;  // s
  // push, mount, steer, dismount; must sum to 1.
  std::array<double, 4> fractions = {0.40, 0.10, 0.45, 0.05};

  double phase_duration(PhaseKind kind) const;
  // Cycle time at which the phase begins.
  double phase_start(PhaseKind kind) const;
};

// Throws std::domain_error unless cycle > 0, fractions non-negative and
// summing to 1 within 1e-12.
void validate(const PhaseSchedule& schedule);

struct PhaseState {
  double phi = 0.0;  // [0, 1)
  PhaseKind kind = PhaseKind::kPushing;
};

// Phase at time t >= 0 (throws std::domain_error on negative t).
PhaseState phase_state(double t, const PhaseSchedule& schedule);

// Indicator-style reward selection: exactly one phase reward (both
// transition kinds select r_trans) plus the always-on regularizer.
double dispatch_reward(PhaseKind kind, double r_push, double r_steer,
                       double r_trans, double r_reg);

}  // namespace skatekit

#endif  // SKATEKIT_PHASE_SCHEDULE_HPP_
