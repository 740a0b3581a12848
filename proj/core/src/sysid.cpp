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

#include "skatekit/sysid.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "skatekit/geometry.hpp"

namespace skatekit {

namespace {

struct Peak {
  double t = 0.0;
  double amplitude = 0.0;
};

std::vector<double> moving_average(const std::vector<FreeDecaySample>& samples,
                                   int window) {
  std::vector<double> out(samples.size());
  const int half = window / 2;
  const int n = static_cast<int>(samples.size());
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    int count = 0;
    for (int j = i - half; j <= i + half; ++j) {
      if (j < 0 || j >= n) continue;
      sum += samples[j].roll;
      ++count;
    }
    out[i] = sum / count;
  }
  return out;
}

// All positive local maxima above the floor, in time order. Interior peaks
// get three-point parabolic refinement; a maximum at the first sample
// (release from rest) is used as-is.
std::vector<Peak> find_peaks(const FreeDecayTrace& trace,
                             const PeakDetectOptions& options) {
  const auto& samples = trace.samples;
  if (samples.size() < 3) {
    throw NoOscillationError("trace too short for peak detection");
  }
  if (options.filter_window < 0 ||
      (options.filter_window != 0 && options.filter_window % 2 == 0)) {
    throw std::invalid_argument("filter window must be odd or 0");
  }

  std::vector<double> values;
  if (options.filter_window > 1) {
    values = moving_average(samples, options.filter_window);
  } else {
    values.reserve(samples.size());
    for (const auto& s : samples) values.push_back(s.roll);
  }

  std::vector<Peak> peaks;
  if (values[0] > values[1] && values[0] > options.noise_floor) {
    peaks.push_back({samples[0].t, values[0]});
  }
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const double ym = values[i - 1];
    const double y0 = values[i];
    const double yp = values[i + 1];
    if (!(y0 > ym && y0 >= yp && y0 > options.noise_floor)) continue;

    const double curvature = ym - 2.0 * y0 + yp;
    double t_peak = samples[i].t;
    double amplitude = y0;
    if (curvature < 0.0) {
      const double dt = samples[i + 1].t - samples[i].t;
      const double offset = 0.5 * (ym - yp) / curvature;
      t_peak += offset * dt;
      amplitude = y0 - 0.25 * (ym - yp) * offset;
    }
    peaks.push_back({t_peak, amplitude});
  }
  return peaks;
}

}  // namespace

PeakPair detect_peaks(const FreeDecayTrace& trace,
                      const PeakDetectOptions& options) {
  const auto peaks = find_peaks(trace, options);
  if (peaks.size() < 2) {
    throw NoOscillationError(
        "no oscillation: fewer than two peaks above the noise floor");
  }
  return {peaks[0].amplitude, peaks[1].amplitude, peaks[1].t - peaks[0].t};
}

IdentificationResult identify_from_peaks(double phi1, double phi2,
                                         double period, double inertia) {
  if (!(phi2 > 0.0) || !(phi1 > phi2)) {
    throw std::domain_error(
        "identify_from_peaks: need phi1 > phi2 > 0 (decaying peaks)");
  }
  if (!(period > 0.0)) {
    throw std::domain_error("identify_from_peaks: period must be positive");
  }
  if (!(inertia > 0.0)) {
    throw std::domain_error("identify_from_peaks: inertia must be positive");
  }

  IdentificationResult r;
  r.log_decrement = std::log(phi1 / phi2);
  r.damping_ratio =
      r.log_decrement / std::sqrt(4.0 * kPi * kPi +
                                  r.log_decrement * r.log_decrement);
  r.damped_period = period;
  const double damped_frequency = kTwoPi / period;
  r.natural_frequency =
      damped_frequency / std::sqrt(1.0 - r.damping_ratio * r.damping_ratio);
  r.stiffness = inertia * r.natural_frequency * r.natural_frequency;
  r.damping = 2.0 * r.damping_ratio * std::sqrt(r.stiffness * inertia);
  return r;
}

IdentificationResult identify(const FreeDecayTrace& trace, double inertia,
                              IdentifyMode mode,
                              const PeakDetectOptions& options) {
  if (mode == IdentifyMode::kFirstTwoPeaks) {
    const PeakPair pair = detect_peaks(trace, options);
    return identify_from_peaks(pair.phi1, pair.phi2, pair.period, inertia);
  }

  const auto peaks = find_peaks(trace, options);
  if (peaks.size() < 2) {
    throw NoOscillationError(
        "no oscillation: fewer than two peaks above the noise floor");
  }
  // ln(amplitude) is linear in the peak index for an exponential envelope;
  // fit its slope for the decrement and the mean spacing for the period.
  const double n = static_cast<double>(peaks.size());
  double sum_i = 0.0, sum_ii = 0.0, sum_y = 0.0, sum_iy = 0.0;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    const double idx = static_cast<double>(i);
    const double y = std::log(peaks[i].amplitude);
    sum_i += idx;
    sum_ii += idx * idx;
    sum_y += y;
    sum_iy += idx * y;
  }
  const double slope = (n * sum_iy - sum_i * sum_y) / (n * sum_ii - sum_i * sum_i);
  const double decrement = -slope;
  if (!(decrement > 0.0)) {
    throw std::domain_error("least-squares fit found a non-decaying envelope");
  }
  const double period = (peaks.back().t - peaks.front().t) / (n - 1.0);

  // Equivalent two-peak amplitudes with the fitted decrement.
  return identify_from_peaks(std::exp(decrement), 1.0, period, inertia);
}

double cuboid_roll_inertia(double mass, double width, double height) {
  if (!(mass > 0.0 && width > 0.0 && height > 0.0)) {
    throw std::domain_error("cuboid_roll_inertia: inputs must be positive");
  }
  return mass * (width * width + height * height) / 12.0;
}

}  // namespace skatekit
