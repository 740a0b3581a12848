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

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "skatekit/scenario.hpp"
#include "skatekit/sysid.hpp"

namespace skatekit {

namespace {

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

// Flat INI-style grammar: [section] headers, key = value lines, '#' comments.
std::vector<Entry> parse_entries(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario config: " + path.string());
  }

  std::vector<Entry> entries;
  std::string section;
  std::string line;
  int line_no = 0;
  const auto fail = [&](const std::string& message) {
    throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " +
                      message);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) fail("empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    Entry entry;
    entry.section = section;
    entry.key = trim(line.substr(0, eq));
    entry.value = trim(line.substr(eq + 1));
    entry.line = line_no;
    if (entry.key.empty()) fail("empty key");
    if (entry.value.empty()) fail("empty value for key \"" + entry.key + "\"");
    if (section.empty()) fail("key \"" + entry.key + "\" outside any section");
    entries.push_back(std::move(entry));
  }
  return entries;
}

class ConfigReader {
 public:
  ConfigReader(const std::filesystem::path& path) : path_(path) {}

  [[noreturn]] void fail(const Entry& entry, const std::string& message) const {
    throw ConfigError(path_.string() + ":" + std::to_string(entry.line) +
                      ": " + message);
  }

  double number(const Entry& entry) const {
    double value = 0.0;
    const char* begin = entry.value.data();
    const char* end = begin + entry.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      fail(entry, "field \"" + entry.key + "\": bad number \"" + entry.value +
                      "\"");
    }
    return value;
  }

  std::uint64_t unsigned_number(const Entry& entry) const {
    std::uint64_t value = 0;
    const char* begin = entry.value.data();
    const char* end = begin + entry.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      fail(entry, "field \"" + entry.key + "\": bad unsigned integer");
    }
    return value;
  }

  std::vector<double> numbers(const Entry& entry, std::size_t count) const {
    std::istringstream fields(entry.value);
    std::vector<double> values;
    double v = 0.0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof() || values.size() != count) {
      fail(entry, "field \"" + entry.key + "\": expected " +
                      std::to_string(count) + " numbers");
    }
    return values;
  }

  // Referenced files are resolved against the config's directory.
  std::filesystem::path resolve(const Entry& entry) const {
    std::filesystem::path p(entry.value);
    if (p.is_relative()) p = path_.parent_path() / p;
    if (!std::filesystem::exists(p)) {
      fail(entry, "referenced file does not exist: " + p.string());
    }
    return p;
  }

 private:
  std::filesystem::path path_;
};

std::vector<KeyBodyPose> load_pose_fixture(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open pose file: " + p.string());
  try {
    return read_pose_file(in);
  } catch (const std::runtime_error& e) {
    throw ConfigError(p.string() + ": " + e.what());
  }
}

}  // namespace

double speed_at(const std::vector<SpeedSegment>& profile, double t) {
  if (profile.empty()) {
    throw std::invalid_argument("speed profile is empty");
  }
  double speed = profile.front().speed;
  for (const SpeedSegment& segment : profile) {
    if (segment.start_time <= t) speed = segment.speed;
  }
  return speed;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
  const auto entries = parse_entries(path);
  const ConfigReader reader(path);

  ScenarioConfig config;
  config.pushing_ref_poses = default_pushing_poses();
  config.steering_ref_poses = default_steering_poses();

  bool horizon_set = false;
  bool tilt_stiffness_set = false;
  bool tilt_damping_set = false;
  const Entry* trace_entry = nullptr;

  for (const Entry& e : entries) {
    const std::string& s = e.section;
    const std::string& k = e.key;

    if (s == "geometry") {
      if (k == "rake_lambda") config.geometry.rake_lambda = reader.number(e);
      else if (k == "truck_height") config.geometry.truck_height = reader.number(e);
      else if (k == "half_width") config.geometry.half_width = reader.number(e);
      else if (k == "wheelbase") config.geometry.wheelbase = reader.number(e);
      else reader.fail(e, "unknown key \"" + k + "\" in [geometry]");
    } else if (s == "tilt") {
      if (k == "inertia") config.tilt_model.inertia = reader.number(e);
      else if (k == "stiffness") {
        config.tilt_model.stiffness = reader.number(e);
        tilt_stiffness_set = true;
      } else if (k == "damping") {
        config.tilt_model.damping = reader.number(e);
        tilt_damping_set = true;
      } else if (k == "trace") {
        trace_entry = &e;
      } else reader.fail(e, "unknown key \"" + k + "\" in [tilt]");
    } else if (s == "schedule") {
      if (k == "cycle") config.schedule.cycle = reader.number(e);
      else if (k == "fractions") {
        const auto f = reader.numbers(e, 4);
        config.schedule.fractions = {f[0], f[1], f[2], f[3]};
      } else reader.fail(e, "unknown key \"" + k + "\" in [schedule]");
    } else if (s == "steering") {
      if (k == "target_heading") config.steering.target_heading = reader.number(e);
      else if (k == "horizon") {
        config.steering.horizon = reader.number(e);
        horizon_set = true;
      } else if (k == "min_speed_clip") config.steering.min_speed_clip = reader.number(e);
      else if (k == "lean_limit") config.steering.lean_limit = reader.number(e);
      else reader.fail(e, "unknown key \"" + k + "\" in [steering]");
    } else if (s == "speed") {
      if (k == "segment") {
        const auto f = reader.numbers(e, 2);
        config.speed_profile.push_back({f[0], f[1]});
      } else reader.fail(e, "unknown key \"" + k + "\" in [speed]");
    } else if (s == "rewards") {
      auto& tol = config.rewards.tolerances;
      if (k == "sigma_speed") tol.speed = reader.number(e);
      else if (k == "sigma_yaw") tol.yaw = reader.number(e);
      else if (k == "sigma_heading") tol.heading = reader.number(e);
      else if (k == "sigma_tilt") tol.tilt = reader.number(e);
      else if (k == "sigma_joint_pose") tol.joint_pose = reader.number(e);
      else if (k == "sigma_marker") tol.marker = reader.number(e);
      else if (k == "sigma_position") tol.position = reader.number(e);
      else if (k == "sigma_rotation") tol.rotation = reader.number(e);
      else if (k == "style_scale") config.rewards.style_scale = reader.number(e);
      else if (k == "air_time_min") config.rewards.air_time_min = reader.number(e);
      else if (k == "air_time_max") config.rewards.air_time_max = reader.number(e);
      else if (k == "speed_threshold") config.rewards.speed_threshold = reader.number(e);
      else reader.fail(e, "unknown key \"" + k + "\" in [rewards]");
    } else if (s == "dr") {
      auto& dr = config.dr_ranges;
      if (k == "robot_com") dr.robot_com = reader.number(e);
      else if (k == "board_com") dr.board_com = reader.number(e);
      else if (k == "root_position") dr.root_position = reader.number(e);
      else if (k == "joint_position") dr.joint_position = reader.number(e);
      else if (k == "push_base_velocity") {
        const auto f = reader.numbers(e, 2);
        dr.push_base_velocity = {f[0], f[1]};
      } else if (k == "body_friction") {
        const auto f = reader.numbers(e, 2);
        dr.body_friction = {f[0], f[1]};
      } else if (k == "deck_friction") {
        const auto f = reader.numbers(e, 2);
        dr.deck_friction = {f[0], f[1]};
      } else reader.fail(e, "unknown key \"" + k + "\" in [dr]");
    } else if (s == "poses") {
      if (k == "pushing_ref") {
        config.pushing_ref_poses = load_pose_fixture(reader.resolve(e));
      } else if (k == "steering_ref") {
        config.steering_ref_poses = load_pose_fixture(reader.resolve(e));
      } else if (k == "foot_lift") {
        config.shape.foot_lift = reader.number(e);
      } else reader.fail(e, "unknown key \"" + k + "\" in [poses]");
    } else if (s == "run") {
      if (k == "dt") config.dt = reader.number(e);
      else if (k == "duration") config.duration = reader.number(e);
      else if (k == "seed") config.seed = reader.unsigned_number(e);
      else if (k == "initial_heading") config.initial_heading = reader.number(e);
      else if (k == "joint_wiggle") config.joint_wiggle = reader.number(e);
      else if (k == "trajectory_csv") config.trajectory_csv = e.value;
      else if (k == "rewards_csv") config.rewards_csv = e.value;
      else reader.fail(e, "unknown key \"" + k + "\" in [run]");
    } else {
      reader.fail(e, "unknown section [" + s + "]");
    }
  }

  if (trace_entry != nullptr) {
    if (tilt_stiffness_set || tilt_damping_set) {
      reader.fail(*trace_entry,
                  "[tilt] gives both a trace and explicit stiffness/damping");
    }
    const auto trace_path = reader.resolve(*trace_entry);
    std::ifstream in(trace_path);
    FreeDecayTrace trace;
    try {
      trace = read_free_decay_csv(in);
      const IdentificationResult id =
          identify(trace, config.tilt_model.inertia);
      config.tilt_model.stiffness = id.stiffness;
      config.tilt_model.damping = id.damping;
    } catch (const std::runtime_error& e) {
      reader.fail(*trace_entry, e.what());
    }
    config.tilt_trace_path = trace_path.string();
  }

  // Cross-field checks.
  try {
    validate(config.geometry);
    validate(config.tilt_model);
    validate(config.schedule);
    if (!horizon_set) {
      config.steering.horizon =
          config.schedule.phase_duration(PhaseKind::kSteering);
    }
    validate(config.steering);
    validate(config.dr_ranges);
  } catch (const std::domain_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }

  if (!(config.dt > 0.0)) {
    throw ConfigError(path.string() + ": [run] dt must be positive");
  }
  if (!(config.duration > 0.0)) {
    throw ConfigError(path.string() + ": [run] duration must be positive");
  }
  if (config.speed_profile.empty()) {
    throw ConfigError(path.string() +
                      ": [speed] needs at least one \"segment = <t> <v>\"");
  }
  double prev_start = -1.0;
  for (const SpeedSegment& segment : config.speed_profile) {
    if (!(segment.start_time > prev_start)) {
      throw ConfigError(path.string() +
                        ": [speed] segment times must be strictly increasing");
    }
    if (!(segment.speed >= 0.0)) {
      throw ConfigError(path.string() + ": [speed] speeds must be >= 0");
    }
    const double steps = segment.start_time / config.dt;
    if (std::abs(steps - std::round(steps)) > 1e-6) {
      throw ConfigError(path.string() +
                        ": [speed] segment boundaries must be multiples of dt");
    }
    prev_start = segment.start_time;
  }
  if (config.speed_profile.front().start_time != 0.0) {
    throw ConfigError(path.string() + ": [speed] first segment must start at 0");
  }
  return config;
}

}  // namespace skatekit
