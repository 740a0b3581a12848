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

#ifndef SKATEKIT_REWARDS_HPP_
#define SKATEKIT_REWARDS_HPP_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "skatekit/board_dynamics.hpp"
#include "skatekit/phase_schedule.hpp"
#include "skatekit/transition_planner.hpp"

namespace skatekit {

// Controllable degrees of freedom of the humanoid (wrist DoFs excluded).
inline constexpr int kDofCount = 23;

using JointVector = std::array<double, kDofCount>;

struct FootState {
  Vec3 position;           // skateboard frame, m
  bool on_ground = false;
  bool on_board = false;
  double air_time = 0.0;   // s since last ground contact
};

// Everything the reward terms read at one control step. Snapshots come from
// fixtures or synthetic generators, not from a physics engine.
struct HumanoidSnapshot {
  JointVector joint_angles{};
  JointVector joint_velocities{};
  JointVector joint_accelerations{};
  JointVector joint_torques{};
  JointVector action{};
  JointVector prev_action{};
  JointVector prev_prev_action{};
  double base_yaw = 0.0;  // robot heading, rad
  FootState left_foot;
  FootState right_foot;
  double left_ankle_height_variance = 0.0;  // m^2, over a recent window
  bool collision = false;
  std::vector<KeyBodyPose> key_body_poses;  // skateboard frame
};

struct JointLimits {
  JointVector lower{};
  JointVector upper{};
};

// Symmetric +-limit for every joint.
JointLimits uniform_joint_limits(double magnitude);

struct RewardWeights {
  // pushing
  double velocity_tracking = 3.0;
  double yaw_alignment = 1.0;
  double feet_air_time = 3.0;
  double ankle_parallel = 0.5;
  // Multiplier on the style reward; the alpha scale below already carries
  // the table weight, so this stays 1 to avoid double counting.
  double style = 1.0;
  // steering
  double steer_feet_contact = 3.0;
  double joint_deviation = 1.5;
  double heading_tracking = 5.0;
  double tilt_tracking = 4.0;
  double feet_marker = 1.0;
  // transition
  double keybody_position = 10.0;
  double keybody_orientation = 10.0;
  // regularization
  double wheel_contact = 0.5;
  double joint_limits = -5.0;
  double joint_velocity = -1e-3;
  double joint_acceleration = -2.5e-7;
  double joint_torque = -1e-6;
  double action_rate = -0.1;
  double action_smoothness = -0.1;
  double collision = -10.0;
};

// Kernel widths for the exponential tracking terms, exp(-err^2 / sigma^2).
struct RewardTolerances {
  double speed = 0.25;       // m/s
  double yaw = 0.25;         // rad
  double heading = 0.25;     // rad
  double tilt = 0.05;        // rad
  double joint_pose = 0.5;   // rad
  double marker = 0.1;       // m
  double position = 0.1;     // m
  double rotation = 0.3;     // rad
};

struct RewardConfig {
  RewardWeights weights;
  RewardTolerances tolerances;
  double style_scale = 5.0;          // alpha
  double air_time_min = 0.2;         // s
  double air_time_max = 0.6;         // s
  double speed_threshold = 0.2;      // m/s; air-time term gates on the command
  double ankle_variance_limit = 0.05;
  JointVector nominal_joint_angles{};
  // Preferred foot-placement markers above the trucks, skateboard frame.
  Vec3 front_marker{0.25, 0.0, 0.05};
  Vec3 rear_marker{-0.25, 0.0, 0.05};
};

// Per-step command context for the phase rewards.
struct Commands {
  double speed_cmd = 0.0;      // m/s
  double heading_target = 0.0; // rad
  double tilt_ref = 0.0;       // rad
  // Discriminator score for the style term; without one the term is skipped.
  std::optional<double> discriminator_score;
};

struct RewardTerm {
  std::string_view name;
  double value = 0.0;  // weighted contribution
};

struct RewardBreakdown {
  std::vector<RewardTerm> terms;
  double total = 0.0;  // sum of the terms, nothing hidden
};

// Phase-specific reward terms for the given phase kind. A transition plan
// must be supplied exactly when kind is a transition (std::invalid_argument
// otherwise). All heading-like errors are wrapped before squaring.
RewardBreakdown evaluate_phase_rewards(PhaseKind kind,
                                       const HumanoidSnapshot& humanoid,
                                       const BoardState& board,
                                       const Commands& commands,
                                       const TransitionPlan* plan, double t,
                                       const RewardConfig& config);

// Always-on regularization block.
RewardBreakdown evaluate_regularization(const HumanoidSnapshot& humanoid,
                                        const std::array<bool, 4>& wheel_contacts,
                                        const JointLimits& limits,
                                        const RewardConfig& config);

// Bounded style reward from a discriminator score:
// alpha * max(0, 1 - (d - 1)^2 / 4). Maximal (= alpha) at d = 1, zero
// outside (-1, 3). Throws std::domain_error unless alpha > 0.
double style_reward(double discriminator_score, double alpha);

// Least-squares discriminator objective (minimization form):
// mean((d_expert - 1)^2) + mean((d_policy + 1)^2). Zero iff the expert
// scores are all +1 and the policy scores all -1.
// Throws std::invalid_argument on an empty sequence.
double discriminator_ls_loss(std::span<const double> expert_scores,
                             std::span<const double> policy_scores);

}  // namespace skatekit

#endif  // SKATEKIT_REWARDS_HPP_
