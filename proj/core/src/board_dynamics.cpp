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

#include "skatekit/board_dynamics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "skatekit/csv.hpp"

namespace skatekit {

double TiltModel::natural_frequency() const {
  return std::sqrt(stiffness / inertia);
}

double TiltModel::damping_ratio() const {
  return damping / (2.0 * std::sqrt(stiffness * inertia));
}

double TiltModel::damped_period() const {
  const double zeta = damping_ratio();
  if (zeta >= 1.0) {
    throw std::domain_error("tilt model is not underdamped");
  }
  return kTwoPi / (natural_frequency() * std::sqrt(1.0 - zeta * zeta));
}

void validate(const TiltModel& model) {
  if (!(model.inertia > 0.0 && model.stiffness > 0.0 && model.damping > 0.0)) {
    throw std::domain_error("tilt model parameters must be strictly positive");
  }
}

BoardState step_planar(const BoardState& state, double gamma_command,
                       const TruckGeometry& geom, double dt) {
  validate(geom);
  if (!(dt > 0.0)) throw std::domain_error("step_planar: dt must be positive");
  if (!(state.speed >= 0.0)) {
    throw std::domain_error("step_planar: speed must be non-negative");
  }

  const double v = state.speed;
  const double yaw_rate = (v / geom.wheelbase) *
                          std::tan(geom.rake_lambda) * std::sin(gamma_command);

  // RK4 on (x, y, psi). The yaw rate is constant across the step, so the
  // heading update is exact; position follows the resulting arc.
  const auto dx = [v](double psi) { return v * std::cos(psi); };
  const auto dy = [v](double psi) { return v * std::sin(psi); };

  const double psi0 = state.heading;
  const double psi1 = psi0 + 0.5 * dt * yaw_rate;
  const double psi2 = psi0 + dt * yaw_rate;

  BoardState next = state;
  next.x = state.x + dt / 6.0 * (dx(psi0) + 4.0 * dx(psi1) + dx(psi2));
  next.y = state.y + dt / 6.0 * (dy(psi0) + 4.0 * dy(psi1) + dy(psi2));
  next.heading = wrap_to_pi(psi0 + dt * yaw_rate);
  next.tilt = gamma_command;
  return next;
}

TiltStep step_tilt(double tilt, double tilt_rate, const TiltModel& model,
                   double external_torque, double dt, double tilt_limit) {
  validate(model);
  if (!(dt > 0.0)) throw std::domain_error("step_tilt: dt must be positive");

  const double accel = (-model.stiffness * tilt - model.damping * tilt_rate +
                        external_torque) /
                       model.inertia;
  double rate = tilt_rate + dt * accel;
  double angle = tilt + dt * rate;

  if (angle > tilt_limit) {
    angle = tilt_limit;
    if (rate > 0.0) rate = 0.0;
  } else if (angle < -tilt_limit) {
    angle = -tilt_limit;
    if (rate < 0.0) rate = 0.0;
  }
  return {angle, rate};
}

FreeDecayTrace simulate_free_decay(const TiltModel& model, double tilt0,
                                   double duration, double dt) {
  validate(model);
  if (!(dt > 0.0)) {
    throw std::invalid_argument("simulate_free_decay: dt must be positive");
  }
  const double zeta = model.damping_ratio();
  if (zeta >= 1.0) {
    throw std::domain_error(
        "simulate_free_decay: model is overdamped, no oscillation peaks");
  }
  const double period = model.damped_period();
  if (!(duration >= 2.0 * period)) {
    throw std::invalid_argument(
        "simulate_free_decay: duration must cover at least two periods");
  }

  const double wn = model.natural_frequency();
  const double wd = wn * std::sqrt(1.0 - zeta * zeta);

  // Release from rest: roll(t) = tilt0 e^(-zeta wn t)
  //                              (cos(wd t) + (zeta wn / wd) sin(wd t)).
  FreeDecayTrace trace;
  const auto count = static_cast<std::size_t>(std::floor(duration / dt)) + 1;
  trace.samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) * dt;
    const double envelope = std::exp(-zeta * wn * t);
    const double roll =
        tilt0 * envelope *
        (std::cos(wd * t) + (zeta * wn / wd) * std::sin(wd * t));
    trace.samples.push_back({t, roll});
  }
  return trace;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
  out << "t,x,y,psi,v,gamma,gamma_rate,sigma\n";
  for (const TrajectorySample& s : trajectory.samples) {
    out << format_double(s.t) << ',' << format_double(s.state.x) << ','
        << format_double(s.state.y) << ',' << format_double(s.state.heading)
        << ',' << format_double(s.state.speed) << ','
        << format_double(s.state.tilt) << ','
        << format_double(s.state.tilt_rate) << ',' << format_double(s.sigma)
        << '\n';
  }
}

}  // namespace skatekit
