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

#include "params.hpp"
#include "regressor.hpp"
#include "solver.hpp"

#include <random>

namespace ipid::test {

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

inline Vec3 vrand(std::mt19937_64& rng, double lo, double hi) {
  const double x = urand(rng, lo, hi);
  const double y = urand(rng, lo, hi);
  const double z = urand(rng, lo, hi);
  return Vec3(x, y, z);
}

inline Rotation random_rotation(std::mt19937_64& rng) {
  return so3_exp(vrand(rng, -1.5, 1.5));
}

/// Interior manifold point: mass in [0.1, 10], |c| <= 1, second moments in
/// [0, 1]^3.
inline ThetaParams random_theta(std::mt19937_64& rng) {
  ThetaParams theta;
  theta.mass = urand(rng, 0.1, 10.0);
  theta.com = vrand(rng, -0.577, 0.577);
  theta.orientation = random_rotation(rng);
  theta.second_moments = vrand(rng, 0.0, 1.0);
  return theta;
}

/// Interior point away from the clamping floors, for derivative checks.
inline ThetaParams random_interior_theta(std::mt19937_64& rng) {
  ThetaParams theta = random_theta(rng);
  theta.second_moments = vrand(rng, 0.05, 1.0);
  return theta;
}

/// Arbitrary parameter vector, consistent or not.
inline InertialParams random_params(std::mt19937_64& rng) {
  Vec10 v;
  for (int i = 0; i < 10; ++i) {
    v(i) = urand(rng, -2.0, 2.0);
  }
  return InertialParams::from_vector(v);
}

inline Twist random_twist(std::mt19937_64& rng) {
  Twist v;
  v.linear = vrand(rng, -3.0, 3.0);
  v.angular = vrand(rng, -3.0, 3.0);
  return v;
}

inline ProperAcc random_acc(std::mt19937_64& rng) {
  ProperAcc a;
  a.linear = vrand(rng, -5.0, 5.0);
  a.angular = vrand(rng, -5.0, 5.0);
  return a;
}

inline Sample random_sample(std::mt19937_64& rng) {
  Sample s;
  s.a = random_acc(rng);
  s.v = random_twist(rng);
  s.f.force = vrand(rng, -5.0, 5.0);
  s.f.moment = vrand(rng, -5.0, 5.0);
  return s;
}

/// Central-difference Jacobian of the stacked residual over the tangent
/// coordinates at z = 0, using the same retraction as the solver.
inline Eigen::MatrixXd fd_jacobian(const ThetaParams& theta,
                                   const StackedSystem& system,
                                   double h = 1e-6) {
  Eigen::MatrixXd jac(system.A.rows(), 10);
  for (int i = 0; i < 10; ++i) {
    Vec10 step = Vec10::Zero();
    step(i) = h;
    const ThetaParams plus = retract(theta, TangentVector::from_vector(step));
    step(i) = -h;
    const ThetaParams minus = retract(theta, TangentVector::from_vector(step));
    const Eigen::VectorXd r_plus =
        system.A * params_from_theta(plus).to_vector() - system.b;
    const Eigen::VectorXd r_minus =
        system.A * params_from_theta(minus).to_vector() - system.b;
    jac.col(i) = (r_plus - r_minus) / (2.0 * h);
  }
  return jac;
}

/// Worst relative column disagreement between analytic and finite-difference
/// Jacobians.
inline double jacobian_fd_error(const ThetaParams& theta,
                                const StackedSystem& system) {
  const auto [r, jac] = residual_and_jacobian(theta, system);
  (void)r;
  const Eigen::MatrixXd fd = fd_jacobian(theta, system);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double scale =
        std::max(1.0, jac.col(i).template lpNorm<Eigen::Infinity>());
    worst = std::max(
        worst,
        (jac.col(i) - fd.col(i)).template lpNorm<Eigen::Infinity>() / scale);
  }
  return worst;
}

inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(1e-12, std::abs(reference));
}

/// Componentwise relative disagreement of two parameter vectors, measured
/// against the reference's per-component magnitude (floor 1).
inline double params_rel_err(const InertialParams& value,
                             const InertialParams& reference) {
  const Vec10 a = value.to_vector();
  const Vec10 b = reference.to_vector();
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    worst = std::max(worst,
                     std::abs(a(i) - b(i)) / std::max(1.0, std::abs(b(i))));
  }
  return worst;
}

}  // namespace ipid::test
