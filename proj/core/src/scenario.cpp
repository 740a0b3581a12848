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

#include "skatekit/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "skatekit/csv.hpp"

namespace skatekit {

namespace {

// Stand-in humanoid stream: canonical stances per phase, plan-following key
// bodies during transitions, and a smooth deterministic joint wiggle so the
// regularization and smoothness metrics see realistic non-zero signals.
class SyntheticHumanoid {
 public:
  SyntheticHumanoid(const ScenarioConfig& config)
      : config_(config) {
    std::mt19937_64 rng(config.seed);
    for (double& phase : joint_phase_) {
      phase = kTwoPi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
  }

  HumanoidSnapshot at(double t, PhaseKind kind, const BoardState& board,
                      const TransitionPlan* plan) const {
    HumanoidSnapshot snap;
    fill_joints(t, snap);
    snap.base_yaw = board.heading;

    switch (kind) {
      case PhaseKind::kPushing: {
        snap.key_body_poses = config_.pushing_ref_poses;
        snap.right_foot.on_board = true;
        // Left foot strokes the ground on a fixed step cadence.
        const double cadence = std::fmod(t, kStrokePeriod);
        snap.left_foot.on_ground = cadence < kStrokeContact;
        snap.left_foot.air_time =
            snap.left_foot.on_ground ? 0.0 : cadence - kStrokeContact;
        snap.left_foot.position = {-0.1, 0.35, snap.left_foot.on_ground ? 0.0 : 0.05};
        snap.right_foot.position = config_.rewards.rear_marker;
        snap.left_ankle_height_variance = 0.01;
        break;
      }
      case PhaseKind::kSteering: {
        snap.key_body_poses = config_.steering_ref_poses;
        snap.left_foot.on_board = true;
        snap.right_foot.on_board = true;
        snap.left_foot.position = config_.rewards.front_marker;
        snap.right_foot.position = config_.rewards.rear_marker;
        break;
      }
      case PhaseKind::kMountTransition:
      case PhaseKind::kDismountTransition: {
        snap.key_body_poses = eval_transition(*plan, t);
        const double s = (t - plan->t0) / (plan->tf - plan->t0);
        const bool mounting = kind == PhaseKind::kMountTransition;
        snap.right_foot.on_board = mounting || s < 0.5;
        snap.left_foot.on_board = mounting ? s >= 0.5 : false;
        snap.left_foot.on_ground = mounting ? false : s >= 0.5;
        for (const KeyBodyPose& pose : snap.key_body_poses) {
          if (pose.body == KeyBody::kLeftAnkle) snap.left_foot.position = pose.position;
          if (pose.body == KeyBody::kRightAnkle) snap.right_foot.position = pose.position;
        }
        break;
      }
    }
    return snap;
  }

 private:
  static constexpr double kStrokePeriod = 0.6;   // s
  static constexpr double kStrokeContact = 0.35; // s on the ground per stroke

  void fill_joints(double t, HumanoidSnapshot& snap) const {
    const double amp = config_.joint_wiggle;
    const double omega = kTwoPi / config_.schedule.cycle;
    const auto angle_at = [&](double when, int i) {
      return config_.rewards.nominal_joint_angles[i] +
             amp * std::sin(omega * when + joint_phase_[i]);
    };
    for (int i = 0; i < kDofCount; ++i) {
      snap.joint_angles[i] = angle_at(t, i);
      snap.joint_velocities[i] =
          amp * omega * std::cos(omega * t + joint_phase_[i]);
      snap.joint_accelerations[i] =
          -amp * omega * omega * std::sin(omega * t + joint_phase_[i]);
      snap.joint_torques[i] = 20.0 * (snap.joint_angles[i] -
                                      config_.rewards.nominal_joint_angles[i]);
      snap.action[i] = angle_at(t, i);
      snap.prev_action[i] = angle_at(t - config_.dt, i);
      snap.prev_prev_action[i] = angle_at(t - 2.0 * config_.dt, i);
    }
  }

  const ScenarioConfig& config_;
  std::array<double, kDofCount> joint_phase_{};
};

struct CyclePosition {
  long index = 0;
  double start = 0.0;  // absolute time of this cycle's beginning
};

// Derived from the same fmod the phase classifier uses; a floor(t / cycle)
// here can disagree with the classifier by one ulp at cycle boundaries and
// mislabel which cycle a transition belongs to.
CyclePosition cycle_position(double t, double cycle) {
  const double local = std::fmod(t, cycle);
  const double start = t - local;
  return {std::lround(start / cycle), start};
}

struct PlanWindow {
  double t0 = 0.0;
  double tf = 0.0;
};

PlanWindow nominal_window(const PhaseSchedule& schedule, PhaseKind kind,
                          double cycle_start) {
  const double t0 = cycle_start + schedule.phase_start(kind);
  return {t0, t0 + schedule.phase_duration(kind)};
}

}  // namespace

std::vector<KeyBodyPose> default_pushing_poses() {
  // Placeholder forward-facing stance, right foot over the rear truck.
  const auto pose = [](KeyBody body, double x, double y, double z) {
    return KeyBodyPose{body, {x, y, z}, Quat{}};
  };
  return {
      pose(KeyBody::kPelvis, -0.05, 0.0, 0.80),
      pose(KeyBody::kTorso, -0.05, 0.0, 1.05),
      pose(KeyBody::kLeftHip, -0.05, 0.09, 0.72),
      pose(KeyBody::kRightHip, -0.05, -0.09, 0.72),
      pose(KeyBody::kLeftKnee, 0.0, 0.12, 0.42),
      pose(KeyBody::kRightKnee, -0.08, -0.10, 0.40),
      pose(KeyBody::kLeftAnkle, -0.10, 0.35, 0.05),
      pose(KeyBody::kRightAnkle, -0.25, 0.0, 0.09),
      pose(KeyBody::kLeftShoulder, -0.02, 0.18, 1.25),
      pose(KeyBody::kRightShoulder, -0.02, -0.18, 1.25),
      pose(KeyBody::kLeftElbow, 0.05, 0.25, 1.00),
      pose(KeyBody::kRightElbow, 0.05, -0.25, 1.00),
      pose(KeyBody::kLeftWrist, 0.12, 0.28, 0.82),
      pose(KeyBody::kRightWrist, 0.12, -0.28, 0.82),
  };
}

std::vector<KeyBodyPose> default_steering_poses() {
  // Placeholder side-on stance, feet over both trucks, torso turned 90 deg.
  const Quat side = quat_from_axis_angle({0.0, 0.0, 1.0}, kPi / 2.0);
  const auto pose = [&](KeyBody body, double x, double y, double z) {
    return KeyBodyPose{body, {x, y, z}, side};
  };
  return {
      pose(KeyBody::kPelvis, 0.0, 0.0, 0.82),
      pose(KeyBody::kTorso, 0.0, 0.0, 1.07),
      pose(KeyBody::kLeftHip, 0.06, 0.0, 0.74),
      pose(KeyBody::kRightHip, -0.06, 0.0, 0.74),
      pose(KeyBody::kLeftKnee, 0.14, 0.02, 0.44),
      pose(KeyBody::kRightKnee, -0.14, 0.02, 0.44),
      pose(KeyBody::kLeftAnkle, 0.25, 0.0, 0.09),
      pose(KeyBody::kRightAnkle, -0.25, 0.0, 0.09),
      pose(KeyBody::kLeftShoulder, 0.10, 0.0, 1.27),
      pose(KeyBody::kRightShoulder, -0.10, 0.0, 1.27),
      pose(KeyBody::kLeftElbow, 0.18, 0.05, 1.02),
      pose(KeyBody::kRightElbow, -0.18, 0.05, 1.02),
      pose(KeyBody::kLeftWrist, 0.22, 0.10, 0.84),
      pose(KeyBody::kRightWrist, -0.22, 0.10, 0.84),
  };
}

RunReport run_scenario(const ScenarioConfig& config) {
  validate(config.geometry);
  validate(config.tilt_model);
  validate(config.schedule);
  validate(config.steering);

  const SyntheticHumanoid humanoid(config);
  const JointLimits limits = uniform_joint_limits(kPi);
  const std::array<bool, 4> wheel_contacts = {true, true, true, true};

  RunReport report;
  const auto steps = static_cast<std::size_t>(
      std::llround(config.duration / config.dt));
  report.trajectory.dt = config.dt;
  report.trajectory.samples.reserve(steps);

  BoardState state;
  state.heading = wrap_to_pi(config.initial_heading);
  state.speed = speed_at(config.speed_profile, 0.0);

  // Per-cycle planning state.
  double steering_tilt_cmd = 0.0;
  long planned_steer_cycle = -1;
  long planned_mount_cycle = -1;
  long planned_dismount_cycle = -1;
  std::optional<TransitionPlan> plan;

  double velocity_error_sum = 0.0;
  std::size_t pushing_steps = 0;
  double heading_error_sum = 0.0;
  std::size_t steering_steps = 0;
  double joint_variation_sum = 0.0;
  std::size_t contact_steps = 0;
  std::size_t contact_violations = 0;
  JointVector prev_joints{};
  bool have_prev_joints = false;

  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * config.dt;
    const PhaseState phase = phase_state(t, config.schedule);
    const CyclePosition pos = cycle_position(t, config.schedule.cycle);
    const long cycle = pos.index;
    state.speed = speed_at(config.speed_profile, t);

    // Plan once per phase visit: tilt reference at steering entry, key-body
    // trajectories at transition entry.
    switch (phase.kind) {
      case PhaseKind::kSteering:
        if (planned_steer_cycle != cycle) {
          planned_steer_cycle = cycle;
          const double delta_psi = heading_error(
              config.steering.target_heading, state.heading);
          steering_tilt_cmd = tilt_reference(delta_psi, state.speed,
                                             config.steering, config.geometry);
        }
        plan.reset();
        break;
      case PhaseKind::kMountTransition:
        if (planned_mount_cycle != cycle) {
          planned_mount_cycle = cycle;
          const PlanWindow w =
              nominal_window(config.schedule, phase.kind, pos.start);
          plan = plan_transition(config.pushing_ref_poses,
                                 config.steering_ref_poses, w.t0, w.tf,
                                 config.shape);
        }
        break;
      case PhaseKind::kDismountTransition:
        if (planned_dismount_cycle != cycle) {
          planned_dismount_cycle = cycle;
          const PlanWindow w =
              nominal_window(config.schedule, phase.kind, pos.start);
          plan = plan_transition(config.steering_ref_poses,
                                 config.pushing_ref_poses, w.t0, w.tf,
                                 config.shape);
        }
        break;
      case PhaseKind::kPushing:
        plan.reset();
        break;
    }

    const bool is_transition = phase.kind == PhaseKind::kMountTransition ||
                               phase.kind == PhaseKind::kDismountTransition;
    const double tilt_cmd =
        phase.kind == PhaseKind::kSteering ? steering_tilt_cmd : 0.0;

    // Record the pre-step state.
    const double sigma = steering_from_tilt(state.tilt, config.geometry);
    report.trajectory.samples.push_back({t, state, sigma});

    // Rewards at this step. The grid time can disagree with the plan window
    // boundary by one ulp; clamp into the window before evaluating.
    const double plan_t = plan ? std::clamp(t, plan->t0, plan->tf) : t;
    const HumanoidSnapshot snap =
        humanoid.at(plan_t, phase.kind, state, plan ? &*plan : nullptr);
    Commands commands;
    commands.speed_cmd = state.speed;
    commands.heading_target = config.steering.target_heading;
    commands.tilt_ref = tilt_cmd;
    commands.discriminator_score = 1.0;
    const RewardBreakdown phase_rewards = evaluate_phase_rewards(
        phase.kind, snap, state, commands, plan ? &*plan : nullptr, plan_t,
        config.rewards);
    const RewardBreakdown regularization = evaluate_regularization(
        snap, wheel_contacts, limits, config.rewards);
    for (const RewardTerm& term : phase_rewards.terms) {
      report.reward_rows.push_back({t, phase.kind, term.name, term.value});
    }
    for (const RewardTerm& term : regularization.terms) {
      report.reward_rows.push_back({t, phase.kind, term.name, term.value});
    }
    report.reward_rows.push_back(
        {t, phase.kind, "total",
         dispatch_reward(phase.kind, phase_rewards.total, phase_rewards.total,
                         phase_rewards.total, regularization.total)});

    // Metrics.
    if (phase.kind == PhaseKind::kPushing) {
      velocity_error_sum += std::abs(commands.speed_cmd - state.speed);
      ++pushing_steps;
    }
    if (phase.kind == PhaseKind::kSteering) {
      heading_error_sum += std::abs(
          heading_error(config.steering.target_heading, state.heading));
      ++steering_steps;
    }
    if (have_prev_joints) {
      double sum_sq = 0.0;
      for (int j = 0; j < kDofCount; ++j) {
        const double d = snap.joint_angles[j] - prev_joints[j];
        sum_sq += d * d;
      }
      joint_variation_sum += std::sqrt(sum_sq);
    }
    prev_joints = snap.joint_angles;
    have_prev_joints = true;
    if (!is_transition) {
      const bool correct =
          phase.kind == PhaseKind::kPushing
              ? (snap.right_foot.on_board && !snap.left_foot.on_board)
              : (snap.right_foot.on_board && snap.left_foot.on_board);
      ++contact_steps;
      if (!correct) ++contact_violations;
    }

    // Advance: tilt spring-damper pulled toward the commanded lean, then the
    // planar model fed with the tilt at the start of the step.
    const double torque = config.tilt_model.stiffness * tilt_cmd;
    const TiltStep tilt = step_tilt(state.tilt, state.tilt_rate,
                                    config.tilt_model, torque, config.dt);
    const double tilt_for_planar = state.tilt;
    state = step_planar(state, tilt_for_planar, config.geometry, config.dt);
    state.tilt = tilt.tilt;
    state.tilt_rate = tilt.tilt_rate;

    if (!std::isfinite(state.x) || !std::isfinite(state.y) ||
        !std::isfinite(state.heading) || !std::isfinite(state.tilt) ||
        !std::isfinite(state.tilt_rate)) {
      throw std::runtime_error("scenario diverged: non-finite state at t = " +
                               format_double(t + config.dt));
    }
  }

  if (pushing_steps > 0) {
    report.mean_velocity_error =
        velocity_error_sum / static_cast<double>(pushing_steps);
  }
  if (steering_steps > 0) {
    report.mean_heading_error =
        heading_error_sum / static_cast<double>(steering_steps);
  }
  if (steps > 1) {
    report.mean_joint_variation =
        joint_variation_sum / static_cast<double>(steps - 1);
  }
  if (contact_steps > 0) {
    report.contact_violation_rate = static_cast<double>(contact_violations) /
                                    static_cast<double>(contact_steps);
  }
  return report;
}

std::pair<std::filesystem::path, std::filesystem::path> write_report_csvs(
    const RunReport& report, const ScenarioConfig& config,
    const std::filesystem::path& output_dir) {
  std::filesystem::create_directories(output_dir);
  const auto trajectory_path = output_dir / config.trajectory_csv;
  const auto rewards_path = output_dir / config.rewards_csv;

  {
    std::ofstream out(trajectory_path);
    if (!out) {
      throw std::runtime_error("cannot write " + trajectory_path.string());
    }
    write_trajectory_csv(report.trajectory, out);
  }
  {
    std::ofstream out(rewards_path);
    if (!out) {
      throw std::runtime_error("cannot write " + rewards_path.string());
    }
    out << "t,phase,term,value\n";
    for (const RewardRow& row : report.reward_rows) {
      out << format_double(row.t) << ',' << to_string(row.phase) << ','
          << row.term << ',' << format_double(row.value) << '\n';
    }
  }
  return {trajectory_path, rewards_path};
}

std::string summary_text(const RunReport& report, const ScenarioConfig& config) {
  std::ostringstream out;
  out << "steps: " << report.trajectory.samples.size() << '\n'
      << "dt: " << format_double(config.dt) << " s\n"
      << "duration: " << format_double(config.duration) << " s\n"
      << "mean_velocity_error: " << format_double(report.mean_velocity_error)
      << " m/s\n"
      << "mean_heading_error: " << format_double(report.mean_heading_error)
      << " rad\n"
      << "mean_joint_variation: " << format_double(report.mean_joint_variation)
      << " rad\n";
  if (report.contact_violation_rate) {
    out << "contact_violation_rate: "
        << format_double(*report.contact_violation_rate) << '\n';
  }
  return out.str();
}

}  // namespace skatekit
