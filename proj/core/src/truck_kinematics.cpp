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
#include <stdexcept>

namespace skatekit {

void validate(const TruckGeometry& geom) {
  if (!(geom.rake_lambda > 0.0 && geom.rake_lambda < kPi / 2.0)) {
    throw std::domain_error("truck geometry: rake angle must be in (0, pi/2)");
  }
  if (!(geom.truck_height > 0.0)) {
    throw std::domain_error("truck geometry: truck height must be positive");
  }
  if (!(geom.half_width > 0.0)) {
    throw std::domain_error("truck geometry: half width must be positive");
  }
  if (!(geom.wheelbase > 0.0)) {
    throw std::domain_error("truck geometry: wheelbase must be positive");
  }
}

namespace {

void check_tilt_domain(double gamma) {
  if (!(std::abs(gamma) <= kPi / 2.0)) {
    throw std::domain_error("tilt angle outside [-pi/2, pi/2]");
  }
}

}  // namespace

double steering_from_tilt(double gamma, const TruckGeometry& geom) {
  validate(geom);
  check_tilt_domain(gamma);
  return std::atan(std::tan(geom.rake_lambda) * std::sin(gamma));
}

double steering_from_tilt(double gamma, const TruckGeometry& geom,
                          TruckSide side) {
  const double sigma = steering_from_tilt(gamma, geom);
  return side == TruckSide::kFront ? sigma : -sigma;
}

double tilt_from_steering(double sigma, const TruckGeometry& geom) {
  validate(geom);
  const double ratio = std::tan(sigma) / std::tan(geom.rake_lambda);
  if (std::abs(ratio) > 1.0) {
    throw std::domain_error(
        "steering angle unreachable: |tan(sigma)| exceeds tan(rake)");
  }
  return std::asin(ratio);
}

TruckConstruction construct_truck_rotation(double gamma,
                                           const TruckGeometry& geom) {
  validate(geom);
  check_tilt_domain(gamma);

  const double h = geom.truck_height;
  const double w = geom.half_width;

  TruckConstruction c;
  if (gamma == 0.0) {
    c.kingpin_eta = 0.0;
    c.wheel_left = {0.0, w, h};
    c.wheel_right = {0.0, -w, h};
    c.truck_center = {0.0, 0.0, h};
    c.contact_residual = 0.0;
    return c;
  }

  // Contact condition cot(eta) = cos(rake) cot(gamma), rearranged to stay
  // finite over the hinge range.
  const double eta =
      std::atan(std::tan(gamma) / std::cos(geom.rake_lambda));
  const double se = std::sin(eta);
  const double ce = std::cos(eta);
  const double sl = std::sin(geom.rake_lambda);
  const double cl = std::cos(geom.rake_lambda);

  // Stage 1: rotate the axle by eta about the kingpin axis.
  const Vec3 wheel_left_kingpin{w * se * sl, w * ce, h - w * se * cl};
  const Vec3 wheel_right_kingpin{-w * se * sl, -w * ce, h + w * se * cl};

  // Stage 2: tilt the whole assembly by gamma about the x-axis.
  const double cg = std::cos(gamma);
  const double sg = std::sin(gamma);
  const auto tilt_about_x = [cg, sg](const Vec3& p) -> Vec3 {
    return {p.x, p.y * cg - p.z * sg, p.z * cg + p.y * sg};
  };

  c.kingpin_eta = eta;
  c.wheel_left = tilt_about_x(wheel_left_kingpin);
  c.wheel_right = tilt_about_x(wheel_right_kingpin);
  c.truck_center = {0.0, -h * sg, h * cg};
  c.contact_residual = c.wheel_left.z - c.wheel_right.z;
  return c;
}

double steering_from_construction(const TruckConstruction& construction) {
  const Vec3& e = construction.wheel_left;
  const double axle_y = e.y - construction.truck_center.y;
  if (e.x == 0.0 && axle_y == 0.0) return 0.0;
  return std::atan2(e.x, axle_y);
}

}  // namespace skatekit
