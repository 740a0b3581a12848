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

#include <array>
#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace skatekit {
namespace {

TEST(PhaseState, CycleStartsPushing) {
  const PhaseSchedule schedule;
  const PhaseState state = phase_state(0.0, schedule);
  EXPECT_EQ(state.phi, 0.0);
  EXPECT_EQ(state.kind, PhaseKind::kPushing);
}

TEST(PhaseState, MountWindowCoversItsFraction) {
  const PhaseSchedule schedule;
  const PhaseState state = phase_state(2.7, schedule);
  EXPECT_NEAR(state.phi, 0.45, 1e-12);
  EXPECT_EQ(state.kind, PhaseKind::kMountTransition);
}

TEST(PhaseState, WrapsExactlyAtCycleBoundary) {
  const PhaseSchedule schedule;
  const PhaseState state = phase_state(6.0, schedule);
  EXPECT_EQ(state.phi, 0.0);
  EXPECT_EQ(state.kind, PhaseKind::kPushing);
}

TEST(PhaseState, PeriodicInCycle) {
  const PhaseSchedule schedule;
  for (double t = 0.0; t < 6.0; t += 0.37) {
    const PhaseState a = phase_state(t, schedule);
    const PhaseState b = phase_state(t + 6.0, schedule);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_NEAR(a.phi, b.phi, 1e-12);
  }
}

TEST(PhaseState, BoundariesBelongToLaterPhase) {
  // Exact binary boundaries so the probe lands on them precisely.
  PhaseSchedule schedule;
  schedule.cycle = 8.0;
  schedule.fractions = {0.25, 0.25, 0.25, 0.25};
  EXPECT_EQ(phase_state(0.0, schedule).kind, PhaseKind::kPushing);
  EXPECT_EQ(phase_state(2.0, schedule).kind, PhaseKind::kMountTransition);
  EXPECT_EQ(phase_state(4.0, schedule).kind, PhaseKind::kSteering);
  EXPECT_EQ(phase_state(6.0, schedule).kind, PhaseKind::kDismountTransition);
  EXPECT_EQ(phase_state(8.0, schedule).kind, PhaseKind::kPushing);
  // The default 6 s cycle hits its steering boundary exactly at t = 3.
  EXPECT_EQ(phase_state(3.0, PhaseSchedule{}).kind, PhaseKind::kSteering);
}

TEST(PhaseState, ControlRateStepCountsMatchFractions) {
  const PhaseSchedule schedule;
  std::array<int, 4> counts = {0, 0, 0, 0};
  for (int k = 0; k < 300; ++k) {
    const PhaseState state = phase_state(k * 0.02, schedule);
    ++counts[static_cast<int>(state.kind)];
  }
  EXPECT_NEAR(counts[0], 120, 1);
  EXPECT_NEAR(counts[1], 30, 1);
  EXPECT_NEAR(counts[2], 135, 1);
  EXPECT_NEAR(counts[3], 15, 1);
  EXPECT_EQ(counts[0] + counts[1] + counts[2] + counts[3], 300);
}

TEST(PhaseState, ExactlyOnePhaseActiveEverywhere) {
  const PhaseSchedule schedule;
  for (double t = 0.0; t < 12.0; t += 0.0107) {
    const PhaseState state = phase_state(t, schedule);
    EXPECT_GE(state.phi, 0.0);
    EXPECT_LT(state.phi, 1.0);
    // The kind is a total function of phi; re-evaluating must agree.
    EXPECT_EQ(phase_state(t, schedule).kind, state.kind);
  }
}

TEST(PhaseState, RejectsBadInputs) {
  const PhaseSchedule schedule;
  EXPECT_THROW(phase_state(-0.1, schedule), std::domain_error);
  PhaseSchedule bad;
  bad.fractions = {0.4, 0.1, 0.4, 0.05};
  EXPECT_THROW(phase_state(0.0, bad), std::domain_error);
  bad = PhaseSchedule{};
  bad.cycle = 0.0;
  EXPECT_THROW(phase_state(0.0, bad), std::domain_error);
  bad = PhaseSchedule{};
  bad.fractions = {1.2, -0.2, 0.0, 0.0};
  EXPECT_THROW(phase_state(0.0, bad), std::domain_error);
}

TEST(PhaseSchedule, StartAndDurationAccessors) {
  const PhaseSchedule schedule;
  EXPECT_EQ(schedule.phase_start(PhaseKind::kPushing), 0.0);
  EXPECT_NEAR(schedule.phase_start(PhaseKind::kMountTransition), 2.4, 1e-12);
  EXPECT_NEAR(schedule.phase_start(PhaseKind::kSteering), 3.0, 1e-12);
  EXPECT_NEAR(schedule.phase_start(PhaseKind::kDismountTransition), 5.7, 1e-12);
  EXPECT_NEAR(schedule.phase_duration(PhaseKind::kSteering), 2.7, 1e-12);
  EXPECT_NEAR(schedule.phase_duration(PhaseKind::kDismountTransition), 0.3,
              1e-12);
}

TEST(DispatchReward, SelectsExactlyOnePhaseRewardPlusRegularizer) {
  EXPECT_EQ(dispatch_reward(PhaseKind::kPushing, 2.0, 9.0, 9.0, 0.5), 2.5);
  EXPECT_EQ(dispatch_reward(PhaseKind::kSteering, 2.0, 9.0, 9.0, 0.5), 9.5);
  EXPECT_EQ(dispatch_reward(PhaseKind::kMountTransition, 2.0, 9.0, 9.0, 0.5),
            9.5);
  EXPECT_EQ(dispatch_reward(PhaseKind::kDismountTransition, 2.0, 9.0, 9.0, 0.5),
            9.5);
}

TEST(DispatchReward, LinearInEachArgument) {
  const double base = dispatch_reward(PhaseKind::kSteering, 1.0, 2.0, 3.0, 4.0);
  const double bumped =
      dispatch_reward(PhaseKind::kSteering, 1.0, 2.0 + 0.5, 3.0, 4.0);
  EXPECT_NEAR(bumped - base, 0.5, 1e-15);
  // Inactive arguments do not leak in.
  EXPECT_EQ(dispatch_reward(PhaseKind::kSteering, 100.0, 2.0, -100.0, 4.0),
            base);
}

}  // namespace
}  // namespace skatekit
