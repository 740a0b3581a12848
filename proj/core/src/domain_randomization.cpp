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

#include "skatekit/domain_randomization.hpp"

#include <ostream>
#include <stdexcept>

#include "skatekit/csv.hpp"

namespace skatekit {

void validate(const DRRanges& ranges) {
  if (ranges.robot_com < 0.0 || ranges.board_com < 0.0 ||
      ranges.root_position < 0.0 || ranges.joint_position < 0.0) {
    throw std::domain_error("dr ranges: half-widths must be non-negative");
  }
  for (const RangeBounds& b : {ranges.push_base_velocity, ranges.body_friction,
                               ranges.deck_friction}) {
    if (!(b.lo <= b.hi)) {
      throw std::domain_error("dr ranges: lower bound exceeds upper bound");
    }
  }
}

double DomainRandomizationSampler::uniform(double lo, double hi) {
  // Top 53 bits of the generator output mapped to [0, 1); libstdc++'s
  // uniform_real_distribution is implementation-defined, this mapping is not.
  const double u =
      static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

DomainRandomizationDraw DomainRandomizationSampler::next(const DRRanges& ranges) {
  validate(ranges);
  DomainRandomizationDraw draw;
  const auto symmetric = [this](double half_width) {
    return uniform(-half_width, half_width);
  };
  draw.robot_com_offset = {symmetric(ranges.robot_com),
                           symmetric(ranges.robot_com),
                           symmetric(ranges.robot_com)};
  draw.board_com_offset = {symmetric(ranges.board_com),
                           symmetric(ranges.board_com),
                           symmetric(ranges.board_com)};
  draw.root_position_offset = {symmetric(ranges.root_position),
                               symmetric(ranges.root_position),
                               symmetric(ranges.root_position)};
  for (double& offset : draw.joint_position_offset) {
    offset = symmetric(ranges.joint_position);
  }
  draw.push_base_velocity =
      uniform(ranges.push_base_velocity.lo, ranges.push_base_velocity.hi);
  draw.body_friction = uniform(ranges.body_friction.lo, ranges.body_friction.hi);
  draw.deck_friction = uniform(ranges.deck_friction.lo, ranges.deck_friction.hi);
  return draw;
}

DomainRandomizationDraw sample_domain_randomization(std::uint64_t seed,
                                                    const DRRanges& ranges) {
  DomainRandomizationSampler sampler(seed);
  return sampler.next(ranges);
}

void write_draws_csv(std::span<const DomainRandomizationDraw> draws,
                     std::ostream& out) {
  out << "index,robot_com_x,robot_com_y,robot_com_z,board_com_x,board_com_y,"
         "board_com_z,root_pos_x,root_pos_y,root_pos_z";
  for (int i = 0; i < kDofCount; ++i) {
    out << ",joint_" << (i < 10 ? "0" : "") << i;
  }
  out << ",push_base_velocity,body_friction,deck_friction\n";

  for (std::size_t row = 0; row < draws.size(); ++row) {
    const DomainRandomizationDraw& d = draws[row];
    out << row;
    for (const Vec3& v : {d.robot_com_offset, d.board_com_offset,
                          d.root_position_offset}) {
      out << ',' << format_double(v.x) << ',' << format_double(v.y) << ','
          << format_double(v.z);
    }
    for (double offset : d.joint_position_offset) {
      out << ',' << format_double(offset);
    }
    out << ',' << format_double(d.push_base_velocity) << ','
        << format_double(d.body_friction) << ','
        << format_double(d.deck_friction) << '\n';
  }
}

}  // namespace skatekit
