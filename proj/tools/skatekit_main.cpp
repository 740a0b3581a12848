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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "skatekit/csv.hpp"
#include "skatekit/domain_randomization.hpp"
#include "skatekit/scenario.hpp"
#include "skatekit/steering_planner.hpp"
#include "skatekit/sysid.hpp"
#include "skatekit/transition_planner.hpp"
#include "skatekit/truck_kinematics.hpp"

namespace {

using namespace skatekit;

int run_kinematics(double rake, double gamma, double height, double half_width,
                   double wheelbase) {
  TruckGeometry geom;
  geom.rake_lambda = rake;
  geom.truck_height = height;
  geom.half_width = half_width;
  geom.wheelbase = wheelbase;

  const double closed = steering_from_tilt(gamma, geom);
  const TruckConstruction c = construct_truck_rotation(gamma, geom);
  const double constructed = steering_from_construction(c);

  std::cout << "sigma_closed_form: " << format_double(closed) << '\n'
            << "sigma_construction: " << format_double(constructed) << '\n'
            << "difference: " << format_double(closed - constructed) << '\n'
            << "kingpin_eta: " << format_double(c.kingpin_eta) << '\n'
            << "contact_residual: " << format_double(c.contact_residual)
            << '\n';
  return 0;
}

int run_sysid(const std::string& trace_path, double inertia,
              const std::string& mode, double noise_floor, int filter_window) {
  std::ifstream in(trace_path);
  if (!in) {
    std::cerr << "error: cannot open trace file: " << trace_path << '\n';
    return 1;
  }
  const FreeDecayTrace trace = read_free_decay_csv(in);

  PeakDetectOptions options;
  options.noise_floor = noise_floor;
  options.filter_window = filter_window;
  const IdentifyMode identify_mode = mode == "least-squares"
                                         ? IdentifyMode::kAllPeaksLeastSquares
                                         : IdentifyMode::kFirstTwoPeaks;
  const PeakPair peaks = detect_peaks(trace, options);
  const IdentificationResult r =
      identify(trace, inertia, identify_mode, options);

  std::cout << "free-decay identification (" << trace.samples.size()
            << " samples)\n"
            << "  peaks:             phi1 = " << format_double(peaks.phi1)
            << " rad, phi2 = " << format_double(peaks.phi2) << " rad\n"
            << "  period:            T = " << format_double(r.damped_period)
            << " s\n"
            << "  log decrement:     delta = " << format_double(r.log_decrement)
            << '\n'
            << "  damping ratio:     zeta = " << format_double(r.damping_ratio)
            << '\n'
            << "  natural frequency: wn = " << format_double(r.natural_frequency)
            << " rad/s\n"
            << "  stiffness:         k = " << format_double(r.stiffness)
            << " N*m/rad\n"
            << "  damping:           d = " << format_double(r.damping)
            << " N*m*s/rad\n"
            << "result"
            << " k=" << format_double(r.stiffness)
            << " d=" << format_double(r.damping)
            << " zeta=" << format_double(r.damping_ratio)
            << " wn=" << format_double(r.natural_frequency)
            << " T=" << format_double(r.damped_period)
            << " delta=" << format_double(r.log_decrement) << '\n';
  return 0;
}

int run_plan_steer(double target, double current, double speed, double horizon,
                   double rake, double wheelbase, double lean_limit,
                   double min_speed, double duration) {
  TruckGeometry geom;
  geom.rake_lambda = rake;
  geom.wheelbase = wheelbase;
  SteeringCommand cmd;
  cmd.target_heading = target;
  cmd.horizon = horizon;
  cmd.lean_limit = lean_limit;
  cmd.min_speed_clip = min_speed;

  const double delta_psi = heading_error(target, current);
  const double gamma = tilt_reference(delta_psi, speed, cmd, geom);
  const HeadingRange range =
      reachable_heading_range(std::max(speed, min_speed), duration, cmd, geom);

  std::cout << "delta_psi: " << format_double(delta_psi) << '\n'
            << "gamma_ref: " << format_double(gamma) << '\n'
            << "sigma_ref: " << format_double(steering_from_tilt(gamma, geom))
            << '\n'
            << "reachable_heading_min: " << format_double(range.min) << '\n'
            << "reachable_heading_max: " << format_double(range.max) << '\n';
  return 0;
}

int run_plan_transition(const std::string& end_path,
                        const std::string& ref_path, double t0, double tf,
                        int samples, double foot_lift,
                        const std::string& output) {
  const auto load = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open pose file: " + path);
    }
    return read_pose_file(in);
  };
  const auto end_poses = load(end_path);
  const auto ref_poses = load(ref_path);
  const TransitionPlan plan =
      plan_transition(end_poses, ref_poses, t0, tf, ShapePolicy{foot_lift});

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "error: cannot write " << output << '\n';
      return 1;
    }
    out = &file;
  }
  *out << "t,body,px,py,pz,qw,qx,qy,qz\n";
  for (int i = 0; i <= samples; ++i) {
    // The rounded last sample may land one ulp past tf.
    const double t =
        i == samples ? tf : t0 + (tf - t0) * static_cast<double>(i) / samples;
    for (const KeyBodyPose& pose : eval_transition(plan, t)) {
      *out << format_double(t) << ',' << to_string(pose.body) << ','
           << format_double(pose.position.x) << ','
           << format_double(pose.position.y) << ','
           << format_double(pose.position.z) << ','
           << format_double(pose.orientation.w) << ','
           << format_double(pose.orientation.x) << ','
           << format_double(pose.orientation.y) << ','
           << format_double(pose.orientation.z) << '\n';
    }
  }
  return 0;
}

int run_sample_dr(std::uint64_t seed, int count, const std::string& output) {
  const DRRanges ranges;
  DomainRandomizationSampler sampler(seed);
  std::vector<DomainRandomizationDraw> draws;
  draws.reserve(count);
  for (int i = 0; i < count; ++i) draws.push_back(sampler.next(ranges));

  if (output.empty()) {
    write_draws_csv(draws, std::cout);
    return 0;
  }
  std::ofstream file(output);
  if (!file) {
    std::cerr << "error: cannot write " << output << '\n';
    return 1;
  }
  write_draws_csv(draws, file);
  return 0;
}

// Output directory precedence: --output-dir, then SKATEKIT_OUTPUT_DIR, then
// the directory of the scenario file itself.
std::filesystem::path resolve_output_dir(const std::string& flag,
                                         const std::filesystem::path& config) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SKATEKIT_OUTPUT_DIR")) return env;
  return config.parent_path();
}

int simulate_one(const std::filesystem::path& path,
                 const std::string& output_flag) {
  const ScenarioConfig config = load_scenario_config(path);
  const RunReport report = run_scenario(config);
  const auto [trajectory, rewards] = write_report_csvs(
      report, config, resolve_output_dir(output_flag, path));
  std::cout << "scenario: " << path.string() << '\n'
            << summary_text(report, config) << "wrote " << trajectory.string()
            << '\n'
            << "wrote " << rewards.string() << '\n';
  return 0;
}

int run_simulate(const std::vector<std::string>& configs,
                 const std::string& output_flag, bool parallel) {
  if (!parallel || configs.size() == 1) {
    int status = 0;
    for (const std::string& path : configs) {
      status |= simulate_one(path, output_flag);
    }
    return status;
  }

  // Independent scenarios, one thread each; output is buffered per scenario
  // so interleaving cannot garble it.
  std::vector<std::thread> workers;
  std::vector<int> statuses(configs.size(), 0);
  std::vector<std::string> outputs(configs.size());
  std::vector<std::string> errors(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    workers.emplace_back([&, i] {
      try {
        const std::filesystem::path path = configs[i];
        const ScenarioConfig config = load_scenario_config(path);
        const RunReport report = run_scenario(config);
        const auto [trajectory, rewards] = write_report_csvs(
            report, config, resolve_output_dir(output_flag, path));
        outputs[i] = "scenario: " + path.string() + '\n' +
                     summary_text(report, config) + "wrote " +
                     trajectory.string() + "\nwrote " + rewards.string() + '\n';
      } catch (const std::exception& e) {
        statuses[i] = 1;
        errors[i] = e.what();
      }
    });
  }
  int status = 0;
  for (std::size_t i = 0; i < workers.size(); ++i) {
    workers[i].join();
    if (statuses[i] != 0) {
      std::cerr << "error: " << errors[i] << '\n';
      status = 1;
    } else {
      std::cout << outputs[i];
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skateboard kinematics, dynamics and reward toolkit"};
  app.require_subcommand(1);

  // kinematics
  double rake = 0.0, gamma = 0.0;
  double height = 0.09, half_width = 0.07, wheelbase = 0.5;
  auto* kinematics = app.add_subcommand(
      "kinematics", "lean-to-steer angle from both the closed form and the "
                    "geometric construction");
  kinematics->add_option("--lambda", rake, "kingpin rake angle (rad)")
      ->required();
  kinematics->add_option("--gamma", gamma, "deck tilt angle (rad)")->required();
  kinematics->add_option("--height", height, "truck height (m)");
  kinematics->add_option("--half-width", half_width, "half axle track (m)");
  kinematics->add_option("--wheelbase", wheelbase, "wheelbase (m)");

  // sysid
  std::string trace_path;
  double inertia = 0.0;
  std::string mode = "peaks";
  double noise_floor = 1e-4;
  int filter_window = 0;
  auto* sysid = app.add_subcommand(
      "sysid", "identify tilt stiffness and damping from a free-decay trace");
  sysid->add_option("trace", trace_path, "free-decay csv (header t,roll)")
      ->required();
  sysid->add_option("--inertia", inertia, "roll inertia (kg m^2)")->required();
  sysid->add_option("--mode", mode, "peaks | least-squares")
      ->check(CLI::IsMember({"peaks", "least-squares"}));
  sysid->add_option("--noise-floor", noise_floor,
                    "ignore peaks below this amplitude (rad)");
  sysid->add_option("--filter-window", filter_window,
                    "odd moving-average window, 0 = off");

  // plan-steer
  double target = 0.0, current = 0.0, speed = 0.0;
  double horizon = 2.7, lean_limit = 0.2, min_speed = 0.3, duration = 2.7;
  double steer_rake = 0.7853981633974483, steer_wheelbase = 0.5;
  auto* plan_steer = app.add_subcommand(
      "plan-steer", "tilt reference and reachable heading range");
  plan_steer->add_option("--target-heading", target, "desired heading (rad)")
      ->required();
  plan_steer->add_option("--current-heading", current,
                         "current board heading (rad)");
  plan_steer->add_option("--speed", speed, "board speed (m/s)")->required();
  plan_steer->add_option("--horizon", horizon, "steering horizon (s)");
  plan_steer->add_option("--lambda", steer_rake, "kingpin rake angle (rad)");
  plan_steer->add_option("--wheelbase", steer_wheelbase, "wheelbase (m)");
  plan_steer->add_option("--lean-limit", lean_limit, "max lean (rad)");
  plan_steer->add_option("--min-speed", min_speed, "speed clip floor (m/s)");
  plan_steer->add_option("--duration", duration,
                         "window for the reachable range (s)");

  // plan-transition
  std::string end_path, ref_path, transition_output;
  double t0 = 0.0, tf = 0.6, foot_lift = 0.05;
  int samples = 50;
  auto* plan_trans = app.add_subcommand(
      "plan-transition", "sample key-body transition trajectories");
  plan_trans->add_option("end", end_path, "terminal pose file")->required();
  plan_trans->add_option("ref", ref_path, "reference pose file")->required();
  plan_trans->add_option("--t0", t0, "window start (s)");
  plan_trans->add_option("--tf", tf, "window end (s)");
  plan_trans->add_option("--samples", samples, "sample count")
      ->check(CLI::PositiveNumber);
  plan_trans->add_option("--foot-lift", foot_lift,
                         "vertical lift on ankle curves (m)");
  plan_trans->add_option("--output", transition_output,
                         "write csv here instead of stdout");

  // sample-dr
  std::uint64_t seed = 0;
  int count = 1;
  std::string dr_output;
  auto* sample_dr = app.add_subcommand(
      "sample-dr", "draw domain-randomization parameters");
  sample_dr->add_option("--seed", seed, "generator seed")->required();
  sample_dr->add_option("--count", count, "number of draws")
      ->check(CLI::PositiveNumber);
  sample_dr->add_option("--output", dr_output,
                        "write csv here instead of stdout");

  // simulate
  std::vector<std::string> scenario_paths;
  std::string output_dir;
  bool parallel = false;
  auto* simulate = app.add_subcommand(
      "simulate", "run scenario files and write trajectory/reward csvs");
  simulate->add_option("scenario", scenario_paths, "scenario config file(s)")
      ->required();
  simulate->add_option("--output-dir", output_dir,
                       "where to write csvs (default: beside the scenario; "
                       "SKATEKIT_OUTPUT_DIR overrides)");
  simulate->add_flag("--parallel", parallel,
                     "run multiple scenarios concurrently");

  CLI11_PARSE(app, argc, argv);

  try {
    if (kinematics->parsed()) {
      return run_kinematics(rake, gamma, height, half_width, wheelbase);
    }
    if (sysid->parsed()) {
      return run_sysid(trace_path, inertia, mode, noise_floor, filter_window);
    }
    if (plan_steer->parsed()) {
      return run_plan_steer(target, current, speed, horizon, steer_rake,
                            steer_wheelbase, lean_limit, min_speed, duration);
    }
    if (plan_trans->parsed()) {
      return run_plan_transition(end_path, ref_path, t0, tf, samples,
                                 foot_lift, transition_output);
    }
    if (sample_dr->parsed()) {
      return run_sample_dr(seed, count, dr_output);
    }
    if (simulate->parsed()) {
      return run_simulate(scenario_paths, output_dir, parallel);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
