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

#include "skatekit/truck_kinematics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace skatekit {
namespace {

TruckGeometry geometry_with_rake(double rake) {
  TruckGeometry geom;
  geom.rake_lambda = rake;
  return geom;
}

TEST(SteeringFromTilt, FlatBoardSteersNowhere) {
  EXPECT_EQ(steering_from_tilt(0.0, geometry_with_rake(0.7)), 0.0);
}

// Expected values frozen from the geometric construction oracle (see
// SteeringMatchesConstruction below, which recomputes them independently).
TEST(SteeringFromTilt, KnownAngles) {
  EXPECT_NEAR(steering_from_tilt(kPi / 6.0, geometry_with_rake(kPi / 4.0)),
              0.4636476090008061, 1e-12);
  EXPECT_NEAR(steering_from_tilt(0.2, geometry_with_rake(kPi / 4.0)),
              0.19611574342595287, 1e-12);
}

TEST(SteeringFromTilt, SignedPerTruckConvention) {
  const TruckGeometry geom = geometry_with_rake(kPi / 4.0);
  const double front = steering_from_tilt(0.15, geom, TruckSide::kFront);
  const double rear = steering_from_tilt(0.15, geom, TruckSide::kRear);
  EXPECT_GT(front, 0.0);
  EXPECT_EQ(rear, -front);
}

TEST(SteeringFromTilt, OddInTilt) {
  const TruckGeometry geom = geometry_with_rake(0.9);
  for (double gamma = 0.01; gamma <= 0.2; gamma += 0.01) {
    EXPECT_EQ(steering_from_tilt(-gamma, geom),
              -steering_from_tilt(gamma, geom));
  }
}

TEST(SteeringFromTilt, BoundedByRake) {
  for (double rake = 0.1; rake < 1.4; rake += 0.13) {
    const TruckGeometry geom = geometry_with_rake(rake);
    for (double gamma = -kPi / 2.0; gamma <= kPi / 2.0; gamma += 0.05) {
      EXPECT_LE(std::abs(steering_from_tilt(gamma, geom)), rake + 1e-15);
    }
  }
}

TEST(SteeringFromTilt, StrictlyIncreasing) {
  const TruckGeometry geom = geometry_with_rake(1.1);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> tilt(-kPi / 2.0, kPi / 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    double g1 = tilt(rng);
    double g2 = tilt(rng);
    if (g1 == g2) continue;
    if (g1 > g2) std::swap(g1, g2);
    EXPECT_LT(steering_from_tilt(g1, geom), steering_from_tilt(g2, geom));
  }
}

TEST(SteeringFromTilt, RejectsBadInputs) {
  const TruckGeometry geom = geometry_with_rake(kPi / 4.0);
  EXPECT_THROW(steering_from_tilt(1.6, geom), std::domain_error);
  EXPECT_THROW(steering_from_tilt(0.1, geometry_with_rake(0.0)),
               std::domain_error);
  EXPECT_THROW(steering_from_tilt(0.1, geometry_with_rake(kPi / 2.0)),
               std::domain_error);
  TruckGeometry bad = geom;
  bad.wheelbase = -1.0;
  EXPECT_THROW(steering_from_tilt(0.1, bad), std::domain_error);
}

TEST(TiltFromSteering, InvertsSteeringFromTilt) {
  const TruckGeometry geom = geometry_with_rake(kPi / 4.0);
  EXPECT_EQ(tilt_from_steering(0.0, geom), 0.0);
  EXPECT_NEAR(tilt_from_steering(0.4636476090008061, geom), kPi / 6.0, 1e-9);

  for (double rake = 0.3; rake < 1.3; rake += 0.21) {
    const TruckGeometry g = geometry_with_rake(rake);
    for (double gamma = -0.2; gamma <= 0.2; gamma += 0.017) {
      const double round_trip = tilt_from_steering(steering_from_tilt(gamma, g), g);
      EXPECT_NEAR(round_trip, gamma, 1e-12);
    }
  }
}

TEST(TiltFromSteering, RejectsUnreachableSteering) {
  // tan(0.8) > 1 = tan(pi/4): no deck tilt produces this angle.
  EXPECT_THROW(tilt_from_steering(0.8, geometry_with_rake(kPi / 4.0)),
               std::domain_error);
}

TEST(Construction, IdentityAtZeroTilt) {
  const TruckGeometry geom = geometry_with_rake(kPi / 4.0);
  const TruckConstruction c = construct_truck_rotation(0.0, geom);
  EXPECT_EQ(c.kingpin_eta, 0.0);
  EXPECT_EQ(c.wheel_left.x, 0.0);
  EXPECT_EQ(c.wheel_left.y, geom.half_width);
  EXPECT_EQ(c.wheel_left.z, geom.truck_height);
  EXPECT_EQ(c.wheel_right.y, -geom.half_width);
  EXPECT_EQ(c.contact_residual, 0.0);
  EXPECT_EQ(steering_from_construction(c), 0.0);
}

TEST(Construction, KingpinAngleSolvesContactCondition) {
  // cot(eta) = cos(rake) cot(gamma)  =>  eta = atan(tan(0.2) / cos(pi/4)).
  const TruckConstruction c =
      construct_truck_rotation(0.2, geometry_with_rake(kPi / 4.0));
  EXPECT_NEAR(c.kingpin_eta, 0.2791879010445465, 1e-12);
  EXPECT_LT(std::abs(c.contact_residual), 1e-12);
}

TEST(Construction, ProjectedSteeringMatchesClosedForm) {
  const TruckGeometry geom = geometry_with_rake(kPi / 4.0);
  const TruckConstruction c = construct_truck_rotation(0.2, geom);
  EXPECT_NEAR(steering_from_construction(c), 0.19611574342595287, 1e-9);
  EXPECT_NEAR(steering_from_construction(c), steering_from_tilt(0.2, geom),
              1e-9);
}

// Closed form vs. full construction across the hinge range and a wide rake
// sweep; the wheels must stay on the ground everywhere.
TEST(Construction, AgreesWithClosedFormOnGrid) {
  for (int i = 0; i < 40; ++i) {
    const double rake = 0.1 + (1.4 - 0.1) * (i + 0.5) / 40.0;
    const TruckGeometry geom = geometry_with_rake(rake);
    for (int j = 0; j < 40; ++j) {
      const double gamma = -0.2 + 0.4 * (j + 0.5) / 40.0;
      const TruckConstruction c = construct_truck_rotation(gamma, geom);
      EXPECT_LT(std::abs(steering_from_construction(c) -
                         steering_from_tilt(gamma, geom)),
                1e-9);
      EXPECT_LT(std::abs(c.contact_residual), 1e-12);
    }
  }
}

TEST(Construction, WheelsStaySymmetricAboutCenter) {
  const TruckGeometry geom = geometry_with_rake(0.6);
  const TruckConstruction c = construct_truck_rotation(0.17, geom);
  const Vec3 midpoint = 0.5 * (c.wheel_left + c.wheel_right);
  EXPECT_NEAR(midpoint.x, c.truck_center.x, 1e-15);
  EXPECT_NEAR(midpoint.y, c.truck_center.y, 1e-15);
  EXPECT_NEAR(midpoint.z, c.truck_center.z, 1e-15);
  // Axle length is preserved by the two rotations.
  EXPECT_NEAR(norm(c.wheel_left - c.wheel_right), 2.0 * geom.half_width, 1e-15);
}

}  // namespace
}  // namespace skatekit
