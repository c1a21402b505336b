// Copyright 2026 The ipid Authors
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

#pragma once

#include "regressor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ipid {

/// Waypoint-interpolation trajectory generator settings. The body frame is
/// driven directly between random poses; whatever mechanism would carry the
/// body is out of scope since identification only consumes (a^g, v, f).
struct TrajectoryConfig {
  int waypoint_count = 13;         // >= 2; segments = waypoint_count - 1
  double segment_duration = 0.5;   // s, > 0
  double sample_rate = 100.0;      // Hz, > 0
  double orientation_spread = 0.8; // rad, per-axis waypoint-to-waypoint step
  double position_spread = 0.3;    // m, half-width of the waypoint box
  Vec3 gravity = Vec3(0.0, 0.0, -9.81);  // m/s^2, world frame
  std::uint64_t seed = 0;

  /// Throws Error(invalid_argument) on out-of-range fields. The orientation
  /// step is capped so consecutive waypoints stay within the injectivity
  /// radius of the rotation log.
  void validate() const;
};

/// Additive i.i.d. Gaussian noise on the measured wrench only; motion is
/// assumed exact, matching the identification model.
struct NoiseConfig {
  double force_std = 0.0;   // N, >= 0
  double moment_std = 0.0;  // N*m, >= 0
  std::uint64_t seed = 0;
};

/// A uniformly sampled wrench/motion recording, optionally tagged with the
/// parameters that generated it.
struct Dataset {
  std::vector<Sample> samples;
  std::optional<InertialParams> ground_truth;
  std::string provenance;
};

/// Quintic timing profile with zero boundary velocity and acceleration:
/// s = 10 tau^3 - 15 tau^4 + 6 tau^5, tau = t/T.
struct MinJerk {
  double s = 0.0;
  double ds = 0.0;   // 1/s
  double dds = 0.0;  // 1/s^2
};

/// Throws Error(out_of_range) unless 0 <= t <= T and T > 0.
[[nodiscard]] MinJerk min_jerk_scalar(double t, double total);

/// Simulates the body between seeded random pose waypoints: positions
/// interpolate linearly under the min-jerk profile, orientations follow the
/// geodesic Q_k * so3_exp(s(t) * so3_log(Q_k^T Q_k+1)). Twist and proper
/// acceleration come from the closed-form derivatives, the wrench from the
/// dynamics plus optional Gaussian noise. Deterministic given the seeds.
[[nodiscard]] Dataset gen_dataset(const InertialParams& pi_true,
                                  const TrajectoryConfig& traj,
                                  const NoiseConfig& noise);

}  // namespace ipid
