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

#include <cmath>
#include <fstream>

#include <gtest/gtest.h>

#include "skatekit/csv.hpp"
#include "test_util.hpp"

namespace skatekit {
namespace {

using ::skatekit::testing::ScratchDir;
using ::skatekit::testing::read_file;

constexpr const char* kTurnScenario = R"(# one-cycle turn fixture
[geometry]
rake_lambda = 0.7853981633974483
wheelbase = 0.5

[tilt]
inertia = 7.15e-3
stiffness = 34.835
damping = 0.540

[steering]
target_heading = 0.2

[speed]
segment = 0.0 1.0

[run]
dt = 0.002
duration = 6.0
seed = 11
)";

TEST(LoadScenarioConfig, AppliesDefaultsAndParsesValues) {
  ScratchDir dir("config");
  const auto path = dir.write_file("turn.cfg", kTurnScenario);
  const ScenarioConfig config = load_scenario_config(path);
  EXPECT_EQ(config.geometry.wheelbase, 0.5);
  EXPECT_EQ(config.tilt_model.stiffness, 34.835);
  EXPECT_EQ(config.schedule.cycle, 6.0);
  // Horizon defaults to the steering phase duration.
  EXPECT_NEAR(config.steering.horizon, 2.7, 1e-12);
  EXPECT_EQ(config.seed, 11u);
  EXPECT_EQ(config.speed_profile.size(), 1u);
  EXPECT_EQ(config.pushing_ref_poses.size(), 14u);
}

TEST(LoadScenarioConfig, DiagnosticsCarryFileAndLine) {
  ScratchDir dir("config_err");
  const auto path = dir.write_file("bad.cfg",
                                   "[geometry]\nrake_lambda = 0.7\nwheel = 3\n");
  try {
    load_scenario_config(path);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("bad.cfg:3"), std::string::npos) << message;
    EXPECT_NE(message.find("wheel"), std::string::npos);
  }
}

TEST(LoadScenarioConfig, RejectsBrokenInputs) {
  ScratchDir dir("config_bad");
  // No speed profile.
  auto path = dir.write_file("nospeed.cfg", "[run]\ndt = 0.002\n");
  EXPECT_THROW(load_scenario_config(path), ConfigError);
  // Key outside a section.
  path = dir.write_file("loose.cfg", "dt = 0.002\n");
  EXPECT_THROW(load_scenario_config(path), ConfigError);
  // Fractions off by a lot.
  path = dir.write_file("fractions.cfg",
                        "[schedule]\nfractions = 0.5 0.1 0.3 0.05\n"
                        "[speed]\nsegment = 0 1\n");
  EXPECT_THROW(load_scenario_config(path), ConfigError);
  // Segment boundary not on the step grid.
  path = dir.write_file("grid.cfg",
                        "[speed]\nsegment = 0 1\nsegment = 0.003 2\n"
                        "[run]\ndt = 0.002\n");
  EXPECT_THROW(load_scenario_config(path), ConfigError);
  // Missing trace file.
  path = dir.write_file("trace.cfg",
                        "[tilt]\ninertia = 7.15e-3\ntrace = nowhere.csv\n"
                        "[speed]\nsegment = 0 1\n");
  EXPECT_THROW(load_scenario_config(path), ConfigError);
  // Trace together with explicit stiffness.
  path = dir.write_file("both.cfg",
                        "[tilt]\ninertia = 7.15e-3\nstiffness = 30\n"
                        "trace = nowhere.csv\n[speed]\nsegment = 0 1\n");
  EXPECT_THROW(load_scenario_config(path), ConfigError);
  // Unparseable number with a line diagnostic.
  path = dir.write_file("number.cfg",
                        "[run]\ndt = fast\n[speed]\nsegment = 0 1\n");
  EXPECT_THROW(load_scenario_config(path), ConfigError);
}

TEST(LoadScenarioConfig, IdentifiesTiltModelFromTraceFile) {
  ScratchDir dir("config_trace");
  const TiltModel truth{7.15e-3, 34.835, 0.540};
  const FreeDecayTrace trace = simulate_free_decay(truth, 0.3, 0.6, 0.002);
  {
    std::ofstream out(dir.path() / "decay.csv");
    write_free_decay_csv(trace, out);
  }
  const auto path = dir.write_file("traced.cfg",
                                   "[tilt]\ninertia = 7.15e-3\n"
                                   "trace = decay.csv\n"
                                   "[speed]\nsegment = 0 1\n");
  const ScenarioConfig config = load_scenario_config(path);
  ASSERT_TRUE(config.tilt_trace_path.has_value());
  EXPECT_NEAR(config.tilt_model.stiffness, truth.stiffness,
              0.01 * truth.stiffness);
  EXPECT_NEAR(config.tilt_model.damping, truth.damping, 0.01 * truth.damping);
}

TEST(SpeedProfile, PiecewiseConstantLookup) {
  const std::vector<SpeedSegment> profile = {{0.0, 1.0}, {2.0, 0.5}};
  EXPECT_EQ(speed_at(profile, 0.0), 1.0);
  EXPECT_EQ(speed_at(profile, 1.999), 1.0);
  EXPECT_EQ(speed_at(profile, 2.0), 0.5);
  EXPECT_EQ(speed_at(profile, 100.0), 0.5);
}

TEST(RunScenario, StraightGlideKeepsHeading) {
  ScratchDir dir("glide");
  const auto path = dir.write_file("glide.cfg",
                                   "[steering]\ntarget_heading = 0.0\n"
                                   "[speed]\nsegment = 0 1.0\n"
                                   "[run]\ndt = 0.002\nduration = 6.0\n");
  const RunReport report = run_scenario(load_scenario_config(path));
  EXPECT_LT(report.mean_heading_error, 0.01);
  EXPECT_EQ(report.mean_velocity_error, 0.0);
  ASSERT_TRUE(report.contact_violation_rate.has_value());
  EXPECT_EQ(*report.contact_violation_rate, 0.0);
}

TEST(RunScenario, OneCycleTurnReachesTarget) {
  ScratchDir dir("turn");
  const auto path = dir.write_file("turn.cfg", kTurnScenario);
  const ScenarioConfig config = load_scenario_config(path);
  const RunReport report = run_scenario(config);

  // Heading at the end of the steering window (t in [3.0, 5.7)).
  const double t_end = 5.7 - config.dt;
  double heading = 0.0;
  for (const TrajectorySample& s : report.trajectory.samples) {
    if (s.t <= t_end + 1e-9) heading = s.state.heading;
  }
  EXPECT_NEAR(heading, 0.2, 0.01 * 0.2);
}

TEST(RunScenario, TrajectoryRowsFollowTheStepGrid) {
  ScratchDir dir("rows");
  const auto path = dir.write_file("turn.cfg", kTurnScenario);
  const ScenarioConfig config = load_scenario_config(path);
  const RunReport report = run_scenario(config);
  ASSERT_EQ(report.trajectory.samples.size(), 3000u);
  EXPECT_EQ(report.trajectory.samples.front().t, 0.0);
  EXPECT_NEAR(report.trajectory.samples.back().t, 6.0 - config.dt, 1e-12);
  // Steering angle column matches the tilt column through the coupling.
  const auto& sample = report.trajectory.samples[2000];
  EXPECT_NEAR(sample.sigma,
              steering_from_tilt(sample.state.tilt, config.geometry), 1e-15);
}

TEST(RunScenario, RewardRowsCoverEveryStepAndDispatch) {
  ScratchDir dir("rewards");
  const auto path = dir.write_file("turn.cfg", kTurnScenario);
  const RunReport report = run_scenario(load_scenario_config(path));
  ASSERT_FALSE(report.reward_rows.empty());
  // Every step ends with a "total" row that equals phase + regularization.
  double phase_sum = 0.0;
  std::size_t totals = 0;
  for (const RewardRow& row : report.reward_rows) {
    if (row.term == "total") {
      EXPECT_NEAR(row.value, phase_sum, 1e-9);
      phase_sum = 0.0;
      ++totals;
    } else {
      phase_sum += row.value;
    }
  }
  EXPECT_EQ(totals, 3000u);
}

TEST(RunScenario, RepeatRunsAreByteIdentical) {
  ScratchDir dir("determinism");
  const auto path = dir.write_file("turn.cfg", kTurnScenario);
  const ScenarioConfig config = load_scenario_config(path);

  const auto [traj_a, rewards_a] =
      write_report_csvs(run_scenario(config), config, dir.path() / "a");
  const auto [traj_b, rewards_b] =
      write_report_csvs(run_scenario(config), config, dir.path() / "b");
  EXPECT_EQ(read_file(traj_a), read_file(traj_b));
  EXPECT_EQ(read_file(rewards_a), read_file(rewards_b));

  const std::string header = read_file(traj_a).substr(0, 38);
  EXPECT_EQ(header, "t,x,y,psi,v,gamma,gamma_rate,sigma\n0,0");
}

TEST(RunScenario, IrregularScheduleSurvivesBoundaryArithmetic) {
  ScratchDir dir("irregular");
  const auto path = dir.write_file(
      "odd.cfg",
      "[schedule]\ncycle = 1.1\nfractions = 0.3 0.2 0.4 0.1\n"
      "[steering]\ntarget_heading = 0.1\n"
      "[speed]\nsegment = 0 0.8\n"
      "[run]\ndt = 0.001\nduration = 7.7\nseed = 3\n");
  const ScenarioConfig config = load_scenario_config(path);
  const RunReport report = run_scenario(config);
  EXPECT_EQ(report.trajectory.samples.size(), 7700u);
  for (const TrajectorySample& s : report.trajectory.samples) {
    EXPECT_TRUE(std::isfinite(s.state.heading));
  }
}

TEST(RunScenario, SummaryListsMetrics) {
  ScratchDir dir("summary");
  const auto path = dir.write_file("turn.cfg", kTurnScenario);
  const ScenarioConfig config = load_scenario_config(path);
  const std::string summary = summary_text(run_scenario(config), config);
  EXPECT_NE(summary.find("mean_velocity_error"), std::string::npos);
  EXPECT_NE(summary.find("mean_heading_error"), std::string::npos);
  EXPECT_NE(summary.find("mean_joint_variation"), std::string::npos);
  EXPECT_NE(summary.find("contact_violation_rate"), std::string::npos);
}

}  // namespace
}  // namespace skatekit
