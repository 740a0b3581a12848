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

#ifndef SKATEKIT_GEOMETRY_HPP_
#define SKATEKIT_GEOMETRY_HPP_

#include <cmath>
#include <numbers>

namespace skatekit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wraps an angle to the half-open interval (-pi, pi].
inline double wrap_to_pi(double angle) {
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped == -kPi) wrapped = kPi;
  return wrapped;
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3 operator*(double s, const Vec3& v) {
  return {s * v.x, s * v.y, s * v.z};
}
inline Vec3 operator*(const Vec3& v, double s) { return s * v; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double squared_norm(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(squared_norm(v)); }

// Unit quaternion, scalar-first (w, x, y, z), right-handed.
struct Quat {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Quat operator-(const Quat& q) { return {-q.w, -q.x, -q.y, -q.z}; }
inline Quat operator+(const Quat& a, const Quat& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Quat operator*(double s, const Quat& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

inline double dot(const Quat& a, const Quat& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double norm(const Quat& q) { return std::sqrt(dot(q, q)); }

inline Quat normalized(const Quat& q) {
  const double n = norm(q);
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

inline Quat quat_from_axis_angle(const Vec3& axis, double angle) {
  const double n = norm(axis);
  const double half = 0.5 * angle;
  const double s = std::sin(half) / n;
  return {std::cos(half), s * axis.x, s * axis.y, s * axis.z};
}

// Geodesic angle between the rotations represented by two unit quaternions,
// insensitive to the double cover (q and -q give the same result).
inline double geodesic_angle(const Quat& a, const Quat& b) {
  const double d = std::min(1.0, std::abs(dot(a, b)));
  return 2.0 * std::acos(d);
}

}  // namespace skatekit

#endif  // SKATEKIT_GEOMETRY_HPP_
