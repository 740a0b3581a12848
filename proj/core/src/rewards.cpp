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

#include "skatekit/rewards.hpp"

#include <cmath>
#include <stdexcept>

#include "skatekit/steering_planner.hpp"

namespace skatekit {

namespace {

double squared_kernel(double error_sq, double sigma) {
  return std::exp(-error_sq / (sigma * sigma));
}

double squared_diff_norm(const JointVector& a, const JointVector& b) {
  double sum = 0.0;
  for (int i = 0; i < kDofCount; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double squared_norm(const JointVector& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return sum;
}

void push_term(RewardBreakdown& breakdown, std::string_view name,
               double value) {
  breakdown.terms.push_back({name, value});
  breakdown.total += value;
}

const KeyBodyPose* find_pose(const std::vector<KeyBodyPose>& poses,
                             KeyBody body) {
  for (const auto& pose : poses) {
    if (pose.body == body) return &pose;
  }
  return nullptr;
}

}  // namespace

JointLimits uniform_joint_limits(double magnitude) {
  JointLimits limits;
  limits.lower.fill(-magnitude);
  limits.upper.fill(magnitude);
  return limits;
}

RewardBreakdown evaluate_phase_rewards(PhaseKind kind,
                                       const HumanoidSnapshot& humanoid,
                                       const BoardState& board,
                                       const Commands& commands,
                                       const TransitionPlan* plan, double t,
                                       const RewardConfig& config) {
  const bool is_transition = kind == PhaseKind::kMountTransition ||
                             kind == PhaseKind::kDismountTransition;
  if (is_transition && plan == nullptr) {
    throw std::invalid_argument(
        "evaluate_phase_rewards: transition phase requires a plan");
  }
  if (!is_transition && plan != nullptr) {
    throw std::invalid_argument(
        "evaluate_phase_rewards: plan supplied outside a transition phase");
  }

  const RewardWeights& w = config.weights;
  const RewardTolerances& tol = config.tolerances;
  RewardBreakdown breakdown;

  switch (kind) {
    case PhaseKind::kPushing: {
      const double speed_err = board.speed - commands.speed_cmd;
      push_term(breakdown, "velocity_tracking",
                w.velocity_tracking * squared_kernel(speed_err * speed_err,
                                                     tol.speed));

      const double yaw_err = heading_error(humanoid.base_yaw, board.heading);
      push_term(breakdown, "yaw_alignment",
                w.yaw_alignment * squared_kernel(yaw_err * yaw_err, tol.yaw));

      const bool air_ok =
          humanoid.left_foot.air_time >= config.air_time_min &&
          humanoid.left_foot.air_time <= config.air_time_max;
      const bool moving = commands.speed_cmd > config.speed_threshold;
      push_term(breakdown, "feet_air_time",
                w.feet_air_time * ((air_ok && moving) ? 1.0 : 0.0));

      const bool parallel =
          humanoid.left_ankle_height_variance < config.ankle_variance_limit &&
          humanoid.left_foot.on_ground;
      push_term(breakdown, "ankle_parallel",
                w.ankle_parallel * (parallel ? 1.0 : 0.0));

      if (commands.discriminator_score) {
        push_term(breakdown, "style",
                  w.style * style_reward(*commands.discriminator_score,
                                         config.style_scale));
      }
      break;
    }

    case PhaseKind::kSteering: {
      const bool both_on_board =
          humanoid.left_foot.on_board && humanoid.right_foot.on_board;
      const double contact = 2.0 * (both_on_board ? 1.0 : 0.0) -
                             (humanoid.left_foot.on_ground ? 1.0 : 0.0);
      push_term(breakdown, "steer_feet_contact", w.steer_feet_contact * contact);

      push_term(breakdown, "joint_deviation",
                w.joint_deviation *
                    squared_kernel(squared_diff_norm(humanoid.joint_angles,
                                                     config.nominal_joint_angles),
                                   tol.joint_pose));

      const double psi_err = heading_error(commands.heading_target,
                                           board.heading);
      push_term(breakdown, "heading_tracking",
                w.heading_tracking * squared_kernel(psi_err * psi_err,
                                                    tol.heading));

      const double tilt_err = board.tilt - commands.tilt_ref;
      push_term(breakdown, "tilt_tracking",
                w.tilt_tracking * squared_kernel(tilt_err * tilt_err, tol.tilt));

      // Left foot pairs with the front marker, right with the rear.
      const double marker_err_sq =
          squared_norm(humanoid.left_foot.position - config.front_marker) +
          squared_norm(humanoid.right_foot.position - config.rear_marker);
      push_term(breakdown, "feet_marker",
                w.feet_marker * squared_kernel(marker_err_sq, tol.marker));
      break;
    }

    case PhaseKind::kMountTransition:
    case PhaseKind::kDismountTransition: {
      const auto planned = eval_transition(*plan, t);
      double pos_err_sq = 0.0;
      double rot_err_sq = 0.0;
      for (const KeyBodyPose& target : planned) {
        const KeyBodyPose* actual =
            find_pose(humanoid.key_body_poses, target.body);
        if (actual == nullptr) {
          throw std::invalid_argument(
              "evaluate_phase_rewards: snapshot is missing key body " +
              std::string(to_string(target.body)));
        }
        pos_err_sq += squared_norm(actual->position - target.position);
        const double angle =
            geodesic_angle(actual->orientation, target.orientation);
        rot_err_sq += angle * angle;
      }
      push_term(breakdown, "keybody_position",
                w.keybody_position * squared_kernel(pos_err_sq, tol.position));
      push_term(breakdown, "keybody_orientation",
                w.keybody_orientation * squared_kernel(rot_err_sq,
                                                       tol.rotation));
      break;
    }
  }
  return breakdown;
}

RewardBreakdown evaluate_regularization(const HumanoidSnapshot& humanoid,
                                        const std::array<bool, 4>& wheel_contacts,
                                        const JointLimits& limits,
                                        const RewardConfig& config) {
  const RewardWeights& w = config.weights;
  RewardBreakdown breakdown;

  const bool all_wheels = wheel_contacts[0] && wheel_contacts[1] &&
                          wheel_contacts[2] && wheel_contacts[3];
  push_term(breakdown, "wheel_contact", w.wheel_contact * (all_wheels ? 1.0 : 0.0));

  int out_of_range = 0;
  for (int i = 0; i < kDofCount; ++i) {
    if (humanoid.joint_angles[i] < limits.lower[i] ||
        humanoid.joint_angles[i] > limits.upper[i]) {
      ++out_of_range;
    }
  }
  push_term(breakdown, "joint_limits", w.joint_limits * out_of_range);

  push_term(breakdown, "joint_velocity",
            w.joint_velocity * squared_norm(humanoid.joint_velocities));
  push_term(breakdown, "joint_acceleration",
            w.joint_acceleration * squared_norm(humanoid.joint_accelerations));
  push_term(breakdown, "joint_torque",
            w.joint_torque * squared_norm(humanoid.joint_torques));

  push_term(breakdown, "action_rate",
            w.action_rate *
                squared_diff_norm(humanoid.action, humanoid.prev_action));

  JointVector second_diff{};
  for (int i = 0; i < kDofCount; ++i) {
    second_diff[i] = humanoid.action[i] - 2.0 * humanoid.prev_action[i] +
                     humanoid.prev_prev_action[i];
  }
  push_term(breakdown, "action_smoothness",
            w.action_smoothness * squared_norm(second_diff));

  push_term(breakdown, "collision",
            w.collision * (humanoid.collision ? 1.0 : 0.0));
  return breakdown;
}

double style_reward(double discriminator_score, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("style_reward: alpha must be positive");
  }
  const double centered = discriminator_score - 1.0;
  return alpha * std::max(0.0, 1.0 - 0.25 * centered * centered);
}

double discriminator_ls_loss(std::span<const double> expert_scores,
                             std::span<const double> policy_scores) {
  if (expert_scores.empty() || policy_scores.empty()) {
    throw std::invalid_argument("discriminator_ls_loss: empty score sequence");
  }
  double expert_sum = 0.0;
  for (double d : expert_scores) expert_sum += (d - 1.0) * (d - 1.0);
  double policy_sum = 0.0;
  for (double d : policy_scores) policy_sum += (d + 1.0) * (d + 1.0);
  return expert_sum / static_cast<double>(expert_scores.size()) +
         policy_sum / static_cast<double>(policy_scores.size());
}

}  // namespace skatekit
