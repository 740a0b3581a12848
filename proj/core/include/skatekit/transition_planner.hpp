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

#ifndef SKATEKIT_TRANSITION_PLANNER_HPP_
#define SKATEKIT_TRANSITION_PLANNER_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "skatekit/geometry.hpp"

namespace skatekit {

// Key bodies whose poses describe the humanoid configuration compactly.
enum class KeyBody {
  kPelvis,
  kTorso,
  kLeftHip,
  kRightHip,
  kLeftKnee,
  kRightKnee,
  kLeftAnkle,
  kRightAnkle,
  kLeftShoulder,
  kRightShoulder,
  kLeftElbow,
  kRightElbow,
  kLeftWrist,
  kRightWrist,
};

inline constexpr int kKeyBodyCount = 14;

inline constexpr std::array<KeyBody, kKeyBodyCount> kAllKeyBodies = {
    KeyBody::kPelvis,       KeyBody::kTorso,         KeyBody::kLeftHip,
    KeyBody::kRightHip,     KeyBody::kLeftKnee,      KeyBody::kRightKnee,
    KeyBody::kLeftAnkle,    KeyBody::kRightAnkle,    KeyBody::kLeftShoulder,
    KeyBody::kRightShoulder, KeyBody::kLeftElbow,    KeyBody::kRightElbow,
    KeyBody::kLeftWrist,    KeyBody::kRightWrist,
};

std::string_view to_string(KeyBody body);
std::optional<KeyBody> key_body_from_string(std::string_view name);

// Pose of one key body in the skateboard frame.
struct KeyBodyPose {
  KeyBody body = KeyBody::kPelvis;
  Vec3 position;     // m
  Quat orientation;  // unit quaternion (w, x, y, z)
};

// Bezier curve through the given control points, evaluated at the normalized
// time s = (t - t0) / (tf - t0). Endpoints interpolate exactly.
// Throws std::invalid_argument on fewer than 2 points or tf <= t0, and
// std::domain_error when t is outside [t0, tf].
Vec3 eval_bezier(std::span<const Vec3> points, double t, double t0, double tf);

// Spherical linear interpolation from q_end (s=0) to q_ref (s=1) along the
// geodesic at constant angular rate. Falls back to normalized linear
// interpolation when the quaternions are nearly identical. Inputs must be
// unit norm and s in [0, 1]; throws std::invalid_argument otherwise.
Quat slerp(const Quat& q_end, const Quat& q_ref, double s);

// How the interior control points are placed: cubic curves with interior
// points on the chord, plus a vertical lift on ankle curves for clearance.
struct ShapePolicy {
  double foot_lift = 0.05;  // m; 0 gives straight-line curves for all bodies
};

// Per-key-body transition: Bezier positions plus slerp orientations over a
// shared time window.
struct TransitionPlan {
  struct BodyTrack {
    KeyBody body = KeyBody::kPelvis;
    std::vector<Vec3> control_points;  // first = end pose, last = ref pose
    Quat q_end;
    Quat q_ref;  // hemisphere-aligned with q_end
  };
  std::vector<BodyTrack> tracks;  // ordered by KeyBody
  double t0 = 0.0;
  double tf = 1.0;
};

// Connects the captured terminal poses of the current phase to the canonical
// reference poses of the next one. Both sets must cover the same bodies
// (any order); throws std::invalid_argument on mismatch or a bad window.
// Reference quaternions are negated when needed so slerp takes the short way.
TransitionPlan plan_transition(std::span<const KeyBodyPose> end_poses,
                               std::span<const KeyBodyPose> ref_poses,
                               double t0, double tf,
                               const ShapePolicy& shape = {});

// Poses at time t within the plan window; throws std::domain_error outside.
std::vector<KeyBodyPose> eval_transition(const TransitionPlan& plan, double t);

// Pose fixture format: one record per line,
//   <body> <px> <py> <pz> <qw> <qx> <qy> <qz>
// with '#' comments; skateboard-frame coordinates, quaternion scalar-first.
std::vector<KeyBodyPose> read_pose_file(std::istream& in);
void write_pose_file(std::span<const KeyBodyPose> poses, std::ostream& out);

}  // namespace skatekit

#endif  // SKATEKIT_TRANSITION_PLANNER_HPP_
