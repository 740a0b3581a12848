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

#ifndef SKATEKIT_DOMAIN_RANDOMIZATION_HPP_
#define SKATEKIT_DOMAIN_RANDOMIZATION_HPP_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>

#include "skatekit/geometry.hpp"
#include "skatekit/rewards.hpp"

namespace skatekit {

struct RangeBounds {
  double lo = 0.0;
  double hi = 0.0;
};

// Physical-parameter randomization ranges. Symmetric fields are half-widths
// (a draw is uniform in [-value, +value] per component).
struct DRRanges {
  double robot_com = 0.025;       // m
  double board_com = 0.025;       // m
  double root_position = 0.02;    // m
  double joint_position = 0.01;   // rad
  RangeBounds push_base_velocity{-0.5, 0.5};  // m/s
  RangeBounds body_friction{0.3, 1.6};
  RangeBounds deck_friction{0.8, 2.0};
};

// Throws std::domain_error on negative half-widths or inverted ranges.
void validate(const DRRanges& ranges);

struct DomainRandomizationDraw {
  Vec3 robot_com_offset;
  Vec3 board_com_offset;
  Vec3 root_position_offset;
  JointVector joint_position_offset{};
  double push_base_velocity = 0.0;
  double body_friction = 0.0;
  double deck_friction = 0.0;
};

// Seeded uniform sampler. Draw order and the bits-to-double mapping are
// fixed, so a given seed yields the same sequence on every platform.
class DomainRandomizationSampler {
 public:
  explicit DomainRandomizationSampler(std::uint64_t seed) : rng_(seed) {}

  DomainRandomizationDraw next(const DRRanges& ranges);

 private:
  double uniform(double lo, double hi);

  std::mt19937_64 rng_;
};

// First draw of a sampler seeded with `seed`.
DomainRandomizationDraw sample_domain_randomization(std::uint64_t seed,
                                                    const DRRanges& ranges);

// CSV with one row per draw; joint offsets flattened to joint_00..joint_22.
void write_draws_csv(std::span<const DomainRandomizationDraw> draws,
                     std::ostream& out);

}  // namespace skatekit

#endif  // SKATEKIT_DOMAIN_RANDOMIZATION_HPP_
