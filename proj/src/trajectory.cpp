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

#include "trajectory.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <cstdio>
#include <random>

namespace ipid {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Largest per-axis orientation step: keeps every waypoint-to-waypoint
// rotation angle (at most spread * sqrt(3)) inside the injectivity radius
// of the rotation log.
constexpr double kMaxOrientationStep = 3.1 / 1.7320508075688772;

// [0, 1) from the top 53 bits; mt19937_64 plus this mapping keeps the
// stream independent of standard-library distribution implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_sym(std::mt19937_64& rng, double half_width) {
  return (2.0 * uniform01(rng) - 1.0) * half_width;
}

// Box-Muller with cached spare; draw order is the determinism contract.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(rng_);
    while (u1 <= 0.0) {
      u1 = uniform01(rng_);
    }
    const double u2 = uniform01(rng_);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace

void TrajectoryConfig::validate() const {
  if (waypoint_count < 2) {
    throw Error(ErrorCode::invalid_argument,
                "trajectory: waypoint_count must be >= 2");
  }
  if (!(segment_duration > 0.0) || !std::isfinite(segment_duration)) {
    throw Error(ErrorCode::invalid_argument,
                "trajectory: segment_duration must be positive");
  }
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
    throw Error(ErrorCode::invalid_argument,
                "trajectory: sample_rate must be positive");
  }
  if (!(orientation_spread >= 0.0) ||
      orientation_spread > kMaxOrientationStep) {
    throw Error(ErrorCode::invalid_argument,
                "trajectory: orientation_spread outside [0, 1.789] rad");
  }
  if (!(position_spread >= 0.0) || !std::isfinite(position_spread)) {
    throw Error(ErrorCode::invalid_argument,
                "trajectory: position_spread must be nonnegative");
  }
  if (!gravity.allFinite()) {
    throw Error(ErrorCode::invalid_argument,
                "trajectory: gravity must be finite");
  }
}

MinJerk min_jerk_scalar(double t, double total) {
  if (!(total > 0.0) || !std::isfinite(total) || !(t >= 0.0) ||
      !(t <= total)) {
    throw Error(ErrorCode::out_of_range, "min_jerk_scalar: need 0 <= t <= T");
  }
  const double tau = t / total;
  const double tau2 = tau * tau;
  const double tau3 = tau2 * tau;
  MinJerk out;
  out.s = ((6.0 * tau - 15.0) * tau + 10.0) * tau3;
  out.ds = ((30.0 * tau - 60.0) * tau + 30.0) * tau2 / total;
  out.dds = ((120.0 * tau - 180.0) * tau + 60.0) * tau / (total * total);
  return out;
}

Dataset gen_dataset(const InertialParams& pi_true,
                    const TrajectoryConfig& traj, const NoiseConfig& noise) {
  traj.validate();
  if (!(noise.force_std >= 0.0) || !(noise.moment_std >= 0.0) ||
      !std::isfinite(noise.force_std) || !std::isfinite(noise.moment_std)) {
    throw Error(ErrorCode::invalid_argument,
                "noise: standard deviations must be nonnegative");
  }

  const int segments = traj.waypoint_count - 1;
  std::vector<Vec3> pos(static_cast<size_t>(traj.waypoint_count));
  std::vector<Rotation> rot(static_cast<size_t>(traj.waypoint_count));
  std::mt19937_64 rng(traj.seed);
  Rotation current;
  for (int k = 0; k < traj.waypoint_count; ++k) {
    // Explicitly sequenced draws; argument evaluation order would not be.
    const double px = uniform_sym(rng, traj.position_spread);
    const double py = uniform_sym(rng, traj.position_spread);
    const double pz = uniform_sym(rng, traj.position_spread);
    const double rx = uniform_sym(rng, traj.orientation_spread);
    const double ry = uniform_sym(rng, traj.orientation_spread);
    const double rz = uniform_sym(rng, traj.orientation_spread);
    current = current * so3_exp(Vec3(rx, ry, rz));
    pos[static_cast<size_t>(k)] = Vec3(px, py, pz);
    rot[static_cast<size_t>(k)] = current;
  }

  std::vector<Vec3> xi(static_cast<size_t>(segments));
  std::vector<Vec3> dp(static_cast<size_t>(segments));
  for (int k = 0; k < segments; ++k) {
    const size_t ks = static_cast<size_t>(k);
    xi[ks] = so3_log(rot[ks].inverse() * rot[ks + 1]);
    dp[ks] = pos[ks + 1] - pos[ks];
  }

  const double t_total = segments * traj.segment_duration;
  const auto count = static_cast<long long>(
      std::llround(t_total * traj.sample_rate));

  Dataset out;
  out.ground_truth = pi_true;
  out.samples.reserve(static_cast<size_t>(count));
  Gaussian gauss(noise.seed);
  const bool noisy = noise.force_std > 0.0 || noise.moment_std > 0.0;

  for (long long i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / traj.sample_rate;
    int k = static_cast<int>(t / traj.segment_duration);
    k = std::min(std::max(k, 0), segments - 1);
    const size_t ks = static_cast<size_t>(k);
    const double tau =
        std::min(t - k * traj.segment_duration, traj.segment_duration);
    const MinJerk mj = min_jerk_scalar(tau, traj.segment_duration);

    const Rotation r = rot[ks] * so3_exp(Vec3(mj.s * xi[ks]));
    const Rotation world_to_body = r.inverse();
    const Vec3 pdot_body = world_to_body * Vec3(mj.ds * dp[ks]);

    Sample sample;
    sample.t = t;
    sample.v.angular = mj.ds * xi[ks];
    sample.v.linear = pdot_body;
    sample.a.angular = mj.dds * xi[ks];
    sample.a.linear = world_to_body * Vec3(mj.dds * dp[ks]) -
                      sample.v.angular.cross(pdot_body) -
                      world_to_body * traj.gravity;
    sample.f = newton_euler_wrench(pi_true, sample.a, sample.v);
    if (noisy) {
      const double f0 = gauss();
      const double f1 = gauss();
      const double f2 = gauss();
      const double m0 = gauss();
      const double m1 = gauss();
      const double m2 = gauss();
      sample.f.force += noise.force_std * Vec3(f0, f1, f2);
      sample.f.moment += noise.moment_std * Vec3(m0, m1, m2);
    }
    out.samples.push_back(sample);
  }

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "synthetic waypoint interpolation: waypoints=%d T=%.17g "
                "rate=%.17g seed=%llu noise_f=%.17g noise_mu=%.17g "
                "noise_seed=%llu",
                traj.waypoint_count, traj.segment_duration, traj.sample_rate,
                static_cast<unsigned long long>(traj.seed), noise.force_std,
                noise.moment_std,
                static_cast<unsigned long long>(noise.seed));
  out.provenance = buf;
  return out;
}

}  // namespace ipid
