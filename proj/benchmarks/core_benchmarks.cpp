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

#include "benchmark/benchmark.h"

#include "skatekit/board_dynamics.hpp"
#include "skatekit/rewards.hpp"
#include "skatekit/scenario.hpp"
#include "skatekit/steering_planner.hpp"
#include "skatekit/sysid.hpp"
#include "skatekit/transition_planner.hpp"
#include "skatekit/truck_kinematics.hpp"

namespace {

using namespace skatekit;

void BM_SteeringFromTilt(benchmark::State& state) {
  const TruckGeometry geom;
  double gamma = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(steering_from_tilt(gamma, geom));
    gamma = -gamma;
  }
}
BENCHMARK(BM_SteeringFromTilt);

void BM_ConstructTruckRotation(benchmark::State& state) {
  const TruckGeometry geom;
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_truck_rotation(0.17, geom));
  }
}
BENCHMARK(BM_ConstructTruckRotation);

void BM_IdentifyFromPeaks(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        identify_from_peaks(0.614, 0.0108, 0.107, 7.15e-3));
  }
}
BENCHMARK(BM_IdentifyFromPeaks);

void BM_DetectPeaksAndIdentify(benchmark::State& state) {
  const TiltModel model{7.15e-3, 34.835, 0.540};
  const FreeDecayTrace trace = simulate_free_decay(model, 0.3, 0.6, 0.002);
  for (auto _ : state) {
    benchmark::DoNotOptimize(identify(trace, model.inertia));
  }
}
BENCHMARK(BM_DetectPeaksAndIdentify);

void BM_StepPlanar(benchmark::State& state) {
  const TruckGeometry geom;
  BoardState board;
  board.speed = 1.0;
  for (auto _ : state) {
    board = step_planar(board, 0.1, geom, 0.002);
    benchmark::DoNotOptimize(board);
  }
}
BENCHMARK(BM_StepPlanar);

void BM_StepTilt(benchmark::State& state) {
  const TiltModel model{7.15e-3, 34.835, 0.540};
  double tilt = 0.15, rate = 0.0;
  for (auto _ : state) {
    const TiltStep next = step_tilt(tilt, rate, model, 0.0, 0.002);
    tilt = next.tilt;
    rate = next.tilt_rate;
    benchmark::DoNotOptimize(tilt);
  }
}
BENCHMARK(BM_StepTilt);

void BM_TiltReference(benchmark::State& state) {
  const TruckGeometry geom;
  const SteeringCommand cmd;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tilt_reference(0.2, 1.0, cmd, geom));
  }
}
BENCHMARK(BM_TiltReference);

void BM_EvalTransition(benchmark::State& state) {
  const TransitionPlan plan = plan_transition(default_pushing_poses(),
                                              default_steering_poses(), 0.0,
                                              0.6);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_transition(plan, t));
    t = t < 0.59 ? t + 0.001 : 0.0;
  }
}
BENCHMARK(BM_EvalTransition);

void BM_SteeringPhaseRewards(benchmark::State& state) {
  HumanoidSnapshot snap;
  snap.left_foot.on_board = true;
  snap.right_foot.on_board = true;
  BoardState board;
  Commands commands;
  const RewardConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_phase_rewards(
        PhaseKind::kSteering, snap, board, commands, nullptr, 0.0, config));
  }
}
BENCHMARK(BM_SteeringPhaseRewards);

}  // namespace
