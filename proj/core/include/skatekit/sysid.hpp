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

#ifndef SKATEKIT_SYSID_HPP_
#define SKATEKIT_SYSID_HPP_

#include <stdexcept>

#include "skatekit/free_decay.hpp"

namespace skatekit {

// Raised when a trace has no identifiable oscillation (overdamped release,
// flat signal, or fewer than two peaks above the noise floor).
class NoOscillationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PeakPair {
  double phi1 = 0.0;    // first positive peak amplitude (rad)
  double phi2 = 0.0;    // next positive peak amplitude (rad)
  double period = 0.0;  // time between them (s)
};

struct PeakDetectOptions {
  // Peaks below this amplitude are ignored.
  double noise_floor = 1e-4;
  // Odd moving-average window applied before detection; 0 disables.
  int filter_window = 0;
};

// Finds the first two successive positive peaks of a free-decay trace.
// Interior maxima are refined to sub-sample accuracy with a three-point
// parabolic fit; a maximum at the very first sample (release from rest) is
// taken as-is. Throws NoOscillationError when fewer than two peaks exist.
PeakPair detect_peaks(const FreeDecayTrace& trace,
                      const PeakDetectOptions& options = {});

// Everything the two-peak procedure determines about the underdamped
// second-order system, given its roll inertia.
struct IdentificationResult {
  double log_decrement = 0.0;      // delta = ln(phi1 / phi2)
  double damping_ratio = 0.0;      // zeta = delta / sqrt(4 pi^2 + delta^2)
  double damped_period = 0.0;      // T (s)
  double natural_frequency = 0.0;  // wn = (2 pi / T) / sqrt(1 - zeta^2)
  double stiffness = 0.0;          // k = I wn^2
  double damping = 0.0;            // d = 2 zeta sqrt(k I)
};

// Two-peak identification. Requires phi1 > phi2 > 0, period > 0, inertia > 0;
// throws std::domain_error otherwise.
IdentificationResult identify_from_peaks(double phi1, double phi2,
                                         double period, double inertia);

enum class IdentifyMode {
  // The standard procedure: first two successive peaks.
  kFirstTwoPeaks,
  // Least-squares fit over every detected peak (log-amplitude regression for
  // the decrement, mean spacing for the period). More noise-tolerant, but
  // not the reference procedure.
  kAllPeaksLeastSquares,
};

// detect_peaks + identify_from_peaks in one call.
IdentificationResult identify(const FreeDecayTrace& trace, double inertia,
                              IdentifyMode mode = IdentifyMode::kFirstTwoPeaks,
                              const PeakDetectOptions& options = {});

// Roll inertia of a rigid cuboid about its long axis: m (w^2 + h^2) / 12.
// Throws std::domain_error on non-positive inputs.
double cuboid_roll_inertia(double mass, double width, double height);

}  // namespace skatekit

#endif  // SKATEKIT_SYSID_HPP_
