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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

namespace skatekit {
namespace {

// Kolmogorov-Smirnov statistic against the uniform CDF on [lo, hi].
double ks_statistic(std::vector<double> samples, double lo, double hi) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = (samples[i] - lo) / (hi - lo);
    const double above = (static_cast<double>(i) + 1.0) / n - cdf;
    const double below = cdf - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return d;
}

TEST(DomainRandomization, SameSeedSameDraw) {
  const DRRanges ranges;
  const DomainRandomizationDraw a = sample_domain_randomization(7, ranges);
  const DomainRandomizationDraw b = sample_domain_randomization(7, ranges);
  EXPECT_EQ(a.robot_com_offset.x, b.robot_com_offset.x);
  EXPECT_EQ(a.joint_position_offset, b.joint_position_offset);
  EXPECT_EQ(a.deck_friction, b.deck_friction);

  const DomainRandomizationDraw c = sample_domain_randomization(8, ranges);
  EXPECT_NE(a.deck_friction, c.deck_friction);
}

TEST(DomainRandomization, DrawsStayInsideDeclaredRanges) {
  const DRRanges ranges;
  DomainRandomizationSampler sampler(123);
  for (int i = 0; i < 10000; ++i) {
    const DomainRandomizationDraw d = sampler.next(ranges);
    for (double v : {d.robot_com_offset.x, d.robot_com_offset.y,
                     d.robot_com_offset.z}) {
      EXPECT_GE(v, -0.025);
      EXPECT_LT(v, 0.025);
    }
    for (double v : {d.board_com_offset.x, d.board_com_offset.y,
                     d.board_com_offset.z}) {
      EXPECT_GE(v, -0.025);
      EXPECT_LT(v, 0.025);
    }
    for (double v : {d.root_position_offset.x, d.root_position_offset.y,
                     d.root_position_offset.z}) {
      EXPECT_GE(v, -0.02);
      EXPECT_LT(v, 0.02);
    }
    for (double v : d.joint_position_offset) {
      EXPECT_GE(v, -0.01);
      EXPECT_LT(v, 0.01);
    }
    EXPECT_GE(d.push_base_velocity, -0.5);
    EXPECT_LT(d.push_base_velocity, 0.5);
    EXPECT_GE(d.body_friction, 0.3);
    EXPECT_LT(d.body_friction, 1.6);
    EXPECT_GE(d.deck_friction, 0.8);
    EXPECT_LT(d.deck_friction, 2.0);
  }
}

TEST(DomainRandomization, FrictionFieldsLookUniform) {
  const DRRanges ranges;
  DomainRandomizationSampler sampler(2718);
  std::vector<double> body, deck;
  body.reserve(10000);
  deck.reserve(10000);
  for (int i = 0; i < 10000; ++i) {
    const DomainRandomizationDraw d = sampler.next(ranges);
    body.push_back(d.body_friction);
    deck.push_back(d.deck_friction);
  }
  EXPECT_LT(ks_statistic(std::move(body), 0.3, 1.6), 0.02);
  EXPECT_LT(ks_statistic(std::move(deck), 0.8, 2.0), 0.02);
}

TEST(DomainRandomization, ValidateRejectsBadRanges) {
  DRRanges bad;
  bad.robot_com = -0.1;
  EXPECT_THROW(validate(bad), std::domain_error);
  bad = DRRanges{};
  bad.deck_friction = {2.0, 0.8};
  EXPECT_THROW(validate(bad), std::domain_error);
}

TEST(DomainRandomization, CsvEmissionIsStable) {
  const DRRanges ranges;
  DomainRandomizationSampler sampler(42);
  std::vector<DomainRandomizationDraw> draws;
  for (int i = 0; i < 3; ++i) draws.push_back(sampler.next(ranges));

  std::ostringstream a;
  write_draws_csv(draws, a);
  std::ostringstream b;
  write_draws_csv(draws, b);
  EXPECT_EQ(a.str(), b.str());

  std::istringstream lines(a.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_TRUE(header.starts_with("index,robot_com_x,"));
  EXPECT_TRUE(header.ends_with("push_base_velocity,body_friction,deck_friction"));
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 3);
}

}  // namespace
}  // namespace skatekit
