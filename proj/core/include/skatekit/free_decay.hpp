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

#ifndef SKATEKIT_FREE_DECAY_HPP_
#define SKATEKIT_FREE_DECAY_HPP_

#include <iosfwd>
#include <vector>

namespace skatekit {

struct FreeDecaySample {
  double t = 0.0;     // s
  double roll = 0.0;  // rad
};

// Roll-angle time series of a perturb-and-release experiment.
struct FreeDecayTrace {
  std::vector<FreeDecaySample> samples;
};

// CSV with header "t,roll"; time strictly increasing.
// Throws std::runtime_error on malformed input (message carries the line).
FreeDecayTrace read_free_decay_csv(std::istream& in);
void write_free_decay_csv(const FreeDecayTrace& trace, std::ostream& out);

}  // namespace skatekit

#endif  // SKATEKIT_FREE_DECAY_HPP_
