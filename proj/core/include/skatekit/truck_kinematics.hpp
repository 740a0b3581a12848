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

#ifndef SKATEKIT_TRUCK_KINEMATICS_HPP_
#define SKATEKIT_TRUCK_KINEMATICS_HPP_

#include "skatekit/geometry.hpp"

namespace skatekit {

// Kinematic description of a skateboard truck. The kingpin axis lies in the
// horizontal plane at a fixed rake angle relative to the board's longitudinal
// axis; tilting the deck rotates the axle about the kingpin, which is what
// couples deck lean to wheel steering.
struct TruckGeometry {
  double rake_lambda = 0.7853981633974483;  // kingpin rake angle (rad)
  double truck_height = 0.09;               // deck-to-pivot height h (m)
  double half_width = 0.07;                 // half the axle track w (m)
  double wheelbase = 0.5;                   // front-to-rear axle distance L (m)
};

// Throws std::domain_error unless 0 < rake < pi/2 and all lengths positive.
void validate(const TruckGeometry& geom);

// The front and rear trucks hinge about opposite axes, so one deck tilt
// steers them in opposite directions.
enum class TruckSide { kFront, kRear };

// Closed-form lean-to-steer coupling: sigma = atan(tan(rake) * sin(gamma)).
// Odd and strictly increasing in gamma; |sigma| <= rake.
// Throws std::domain_error if |gamma| > pi/2 or the geometry is invalid.
double steering_from_tilt(double gamma, const TruckGeometry& geom);

// Signed per-truck variant: positive gamma steers the front truck by +sigma
// and the rear truck by -sigma.
double steering_from_tilt(double gamma, const TruckGeometry& geom,
                          TruckSide side);

// Analytic inverse of steering_from_tilt. Throws std::domain_error when
// |tan(sigma)| > tan(rake) (steering angle unreachable by any deck tilt).
double tilt_from_steering(double sigma, const TruckGeometry& geom);

// Full geometric construction of a tilted truck, used as an independent
// check of steering_from_tilt.
//
// Frame: origin at the deck-center ground projection, x longitudinal, z up.
// At rest the pivot center sits at C = (0, 0, h) and the wheels at
// E = (0, w, h), F = (0, -w, h). The tilted configuration is built in two
// stages: a rotation by eta about the kingpin axis, then a rotation by gamma
// about the x-axis. eta is solved from the wheel-ground contact condition
// (both wheels at equal height), cot(eta) = cos(rake) * cot(gamma).
struct TruckConstruction {
  double kingpin_eta = 0.0;   // kingpin rotation solving the contact condition
  Vec3 wheel_left;            // E'' (starts at +y)
  Vec3 wheel_right;           // F'' (starts at -y)
  Vec3 truck_center;          // C''
  double contact_residual = 0.0;  // z(E'') - z(F''), ~0 when solved
};

// Throws std::domain_error if |gamma| > pi/2 or geometry invalid.
// gamma = 0 returns the identity configuration (the contact condition is
// singular there but its physical limit is eta = 0).
TruckConstruction construct_truck_rotation(double gamma,
                                           const TruckGeometry& geom);

// Steering angle read off a constructed configuration: the top-view angle of
// the axle direction, tan(sigma) = x(E'') / (y(E'') - y(C'')).
double steering_from_construction(const TruckConstruction& construction);

}  // namespace skatekit

#endif  // SKATEKIT_TRUCK_KINEMATICS_HPP_
