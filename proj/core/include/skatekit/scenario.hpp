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

#ifndef SKATEKIT_SCENARIO_HPP_
#define SKATEKIT_SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skatekit/board_dynamics.hpp"
#include "skatekit/domain_randomization.hpp"
#include "skatekit/phase_schedule.hpp"
#include "skatekit/rewards.hpp"
#include "skatekit/steering_planner.hpp"
#include "skatekit/transition_planner.hpp"

namespace skatekit {

// Configuration problem with a file/line diagnostic in what().
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpeedSegment {
  double start_time = 0.0;  // s; first segment starts at 0
  double speed = 0.0;       // m/s, held constant until the next segment
};

// A fully resolved scenario. Loadable from an INI-style key=value file;
// every field has a usable default except the speed profile.
struct ScenarioConfig {
  TruckGeometry geometry;
  TiltModel tilt_model;
  // Set when the tilt model was identified from a free-decay trace file.
  std::optional<std::string> tilt_trace_path;
  PhaseSchedule schedule;
  SteeringCommand steering;
  std::vector<SpeedSegment> speed_profile;
  RewardConfig rewards;
  DRRanges dr_ranges;
  ShapePolicy shape;
  std::vector<KeyBodyPose> pushing_ref_poses;   // canonical pushing stance
  std::vector<KeyBodyPose> steering_ref_poses;  // canonical steering stance
  double dt = 0.002;
  double duration = 12.0;
  double initial_heading = 0.0;
  double joint_wiggle = 0.05;  // synthetic joint motion amplitude, rad
  std::uint64_t seed = 0;
  std::string trajectory_csv = "trajectory.csv";
  std::string rewards_csv = "rewards.csv";
};

// Built-in placeholder stances (configurable via pose files; not measured
// ground truth).
std::vector<KeyBodyPose> default_pushing_poses();
std::vector<KeyBodyPose> default_steering_poses();

// Parses and validates a scenario file. Referenced files (tilt trace, pose
// fixtures) are resolved relative to the config file and must exist.
// Throws ConfigError with "<file>:<line>: ..." diagnostics.
ScenarioConfig load_scenario_config(const std::filesystem::path& path);

// Commanded speed at time t.
double speed_at(const std::vector<SpeedSegment>& profile, double t);

struct RewardRow {
  double t = 0.0;
  PhaseKind phase = PhaseKind::kPushing;
  std::string_view term;
  double value = 0.0;
};

struct RunReport {
  Trajectory trajectory;
  std::vector<RewardRow> reward_rows;
  // Mean |v_cmd - v_board| over pushing steps.
  double mean_velocity_error = 0.0;
  // Mean wrapped |psi_target - psi_board| over steering steps.
  double mean_heading_error = 0.0;
  // Mean per-step joint-angle variation ||theta_t - theta_(t-1)||.
  double mean_joint_variation = 0.0;
  // Fraction of steps violating the phase contact pattern (single-foot board
  // contact while pushing, double-foot while steering); only computed when
  // foot-contact booleans are available in the snapshot stream.
  std::optional<double> contact_violation_rate;
};

// Deterministic single-threaded rollout: steps the tilt spring-damper toward
// the commanded tilt, integrates the planar model, evaluates the reward suite
// against a synthetic humanoid stream, and accumulates the report.
// Throws std::runtime_error naming the failing timestep if the state stops
// being finite.
RunReport run_scenario(const ScenarioConfig& config);

// Writes trajectory and reward CSVs into output_dir using the file names
// from the config. Returns the two paths written.
std::pair<std::filesystem::path, std::filesystem::path> write_report_csvs(
    const RunReport& report, const ScenarioConfig& config,
    const std::filesystem::path& output_dir);

// Human-readable summary (step counts and metrics), one fact per line.
std::string summary_text(const RunReport& report, const ScenarioConfig& config);

}  // namespace skatekit

#endif  // SKATEKIT_SCENARIO_HPP_
