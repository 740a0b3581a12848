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

#include "skatekit/transition_planner.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "skatekit/csv.hpp"

namespace skatekit {

namespace {

constexpr std::array<std::string_view, kKeyBodyCount> kKeyBodyNames = {
    "pelvis",        "torso",        "left_hip",      "right_hip",
    "left_knee",     "right_knee",   "left_ankle",    "right_ankle",
    "left_shoulder", "right_shoulder", "left_elbow",  "right_elbow",
    "left_wrist",    "right_wrist",
};

bool is_foot(KeyBody body) {
  return body == KeyBody::kLeftAnkle || body == KeyBody::kRightAnkle;
}

void check_unit(const Quat& q, const char* who) {
  if (std::abs(norm(q) - 1.0) > 1e-6) {
    throw std::invalid_argument(std::string(who) +
                                ": quaternion must be unit norm");
  }
}

}  // namespace

std::string_view to_string(KeyBody body) {
  return kKeyBodyNames[static_cast<int>(body)];
}

std::optional<KeyBody> key_body_from_string(std::string_view name) {
  for (int i = 0; i < kKeyBodyCount; ++i) {
    if (kKeyBodyNames[i] == name) return static_cast<KeyBody>(i);
  }
  return std::nullopt;
}

Vec3 eval_bezier(std::span<const Vec3> points, double t, double t0,
                 double tf) {
  if (points.size() < 2) {
    throw std::invalid_argument("eval_bezier: need at least 2 control points");
  }
  if (!(tf > t0)) {
    throw std::invalid_argument("eval_bezier: window must have tf > t0");
  }
  if (!(t >= t0 && t <= tf)) {
    throw std::domain_error("eval_bezier: t outside [t0, tf]");
  }
  const double s = (t - t0) / (tf - t0);

  // De Casteljau: repeated lerp of the control polygon; endpoint-exact and
  // stable for any order.
  std::vector<Vec3> work(points.begin(), points.end());
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) {
      work[i] = (1.0 - s) * work[i] + s * work[i + 1];
    }
  }
  return work[0];
}

Quat slerp(const Quat& q_end, const Quat& q_ref, double s) {
  check_unit(q_end, "slerp");
  check_unit(q_ref, "slerp");
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("slerp: s must be in [0, 1]");
  }

  const double cos_omega = std::clamp(dot(q_end, q_ref), -1.0, 1.0);
  const double omega = std::acos(cos_omega);
  const double sin_omega = std::sin(omega);
  if (sin_omega < 1e-6) {
    // Nearly identical orientations: linear blend, renormalized.
    return normalized((1.0 - s) * q_end + s * q_ref);
  }
  const double a = std::sin((1.0 - s) * omega) / sin_omega;
  const double b = std::sin(s * omega) / sin_omega;
  return normalized(a * q_end + b * q_ref);
}

TransitionPlan plan_transition(std::span<const KeyBodyPose> end_poses,
                               std::span<const KeyBodyPose> ref_poses,
                               double t0, double tf, const ShapePolicy& shape) {
  if (!(tf > t0)) {
    throw std::invalid_argument("plan_transition: window must have tf > t0");
  }
  if (end_poses.size() != ref_poses.size() || end_poses.empty()) {
    throw std::invalid_argument(
        "plan_transition: end and reference pose sets must match");
  }

  const auto find_pose = [](std::span<const KeyBodyPose> poses, KeyBody body)
      -> const KeyBodyPose* {
    for (const auto& pose : poses) {
      if (pose.body == body) return &pose;
    }
    return nullptr;
  };

  TransitionPlan plan;
  plan.t0 = t0;
  plan.tf = tf;
  plan.tracks.reserve(end_poses.size());
  for (KeyBody body : kAllKeyBodies) {
    const KeyBodyPose* end = find_pose(end_poses, body);
    const KeyBodyPose* ref = find_pose(ref_poses, body);
    if (static_cast<bool>(end) != static_cast<bool>(ref)) {
      throw std::invalid_argument(
          "plan_transition: body sets differ: " + std::string(to_string(body)));
    }
    if (!end) continue;
    check_unit(end->orientation, "plan_transition");
    check_unit(ref->orientation, "plan_transition");

    TransitionPlan::BodyTrack track;
    track.body = body;

    // Cubic with interior points at thirds of the chord; feet get a vertical
    // lift for clearance.
    const Vec3 delta = ref->position - end->position;
    const Vec3 lift{0.0, 0.0, is_foot(body) ? shape.foot_lift : 0.0};
    track.control_points = {
        end->position,
        end->position + (1.0 / 3.0) * delta + lift,
        end->position + (2.0 / 3.0) * delta + lift,
        ref->position,
    };

    // Hemisphere alignment so slerp takes the short way.
    track.q_end = end->orientation;
    track.q_ref = dot(end->orientation, ref->orientation) < 0.0
                      ? -ref->orientation
                      : ref->orientation;
    plan.tracks.push_back(std::move(track));
  }
  if (plan.tracks.size() != end_poses.size()) {
    throw std::invalid_argument("plan_transition: duplicate bodies in pose set");
  }
  return plan;
}

std::vector<KeyBodyPose> eval_transition(const TransitionPlan& plan, double t) {
  if (!(t >= plan.t0 && t <= plan.tf)) {
    throw std::domain_error("eval_transition: t outside the plan window");
  }
  const double s = (t - plan.t0) / (plan.tf - plan.t0);

  std::vector<KeyBodyPose> poses;
  poses.reserve(plan.tracks.size());
  for (const auto& track : plan.tracks) {
    KeyBodyPose pose;
    pose.body = track.body;
    pose.position = eval_bezier(track.control_points, t, plan.t0, plan.tf);
    pose.orientation = slerp(track.q_end, track.q_ref, s);
    poses.push_back(pose);
  }
  return poses;
}

std::vector<KeyBodyPose> read_pose_file(std::istream& in) {
  std::vector<KeyBodyPose> poses;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string body_name;
    if (!(fields >> body_name)) continue;  // blank or comment-only line

    const auto body = key_body_from_string(body_name);
    if (!body) {
      throw std::runtime_error("pose file line " + std::to_string(line_no) +
                               ": unknown body \"" + body_name + "\"");
    }
    KeyBodyPose pose;
    pose.body = *body;
    if (!(fields >> pose.position.x >> pose.position.y >> pose.position.z >>
          pose.orientation.w >> pose.orientation.x >> pose.orientation.y >>
          pose.orientation.z)) {
      throw std::runtime_error("pose file line " + std::to_string(line_no) +
                               ": expected <body> px py pz qw qx qy qz");
    }
    std::string extra;
    if (fields >> extra) {
      throw std::runtime_error("pose file line " + std::to_string(line_no) +
                               ": trailing fields");
    }
    if (std::abs(norm(pose.orientation) - 1.0) > 1e-6) {
      throw std::runtime_error("pose file line " + std::to_string(line_no) +
                               ": quaternion is not unit norm");
    }
    poses.push_back(pose);
  }
  return poses;
}

void write_pose_file(std::span<const KeyBodyPose> poses, std::ostream& out) {
  for (const auto& pose : poses) {
    out << to_string(pose.body) << ' ' << format_double(pose.position.x) << ' '
        << format_double(pose.position.y) << ' '
        << format_double(pose.position.z) << ' '
        << format_double(pose.orientation.w) << ' '
        << format_double(pose.orientation.x) << ' '
        << format_double(pose.orientation.y) << ' '
        << format_double(pose.orientation.z) << '\n';
  }
}

}  // namespace skatekit
