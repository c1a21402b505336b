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

#include <cstdint>
#include <utility>
#include <vector>

namespace ipid {

/// Tangent step z at the current chart point: one scalar for mass, three for
/// the center of mass, three for the SO(3) tangent at the current Q, three
/// for the principal second moments. Column order of the chart Jacobian.
struct TangentVector {
  double dm = 0.0;
  Vec3 dc = Vec3::Zero();
  Vec3 omega = Vec3::Zero();
  Vec3 dL = Vec3::Zero();

  [[nodiscard]] Vec10 to_vector() const;
  [[nodiscard]] static TangentVector from_vector(const Vec10& z);
};

/// Knobs of the damped Gauss-Newton iteration. Defaults are the shipped
/// behavior; every field is overridable from the CLI config file.
struct SolverConfig {
  int max_iters = 500;
  double grad_tol = 1e-10;      // infinity norm of the projected gradient
  double step_tol = 1e-12;      // infinity norm of an accepted step
  double damping0 = 1e-6;       // initial Levenberg parameter
  double mass_floor = 1e-9;     // kg, lower bound kept active by retraction
  double moment_floor = 1e-12;  // kg*m^2, same for each second moment
  std::uint64_t seed = 0;       // reserved; no stochastic choice by default
  bool record_iterates = false;
};

/// Outcome of one manifold solve. objective_history holds the objective at
/// the start plus after every accepted step and is non-increasing; iterates
/// mirrors it with the accepted chart points when record_iterates is set.
struct SolveReport {
  int iterations = 0;        // trial steps, accepted or rejected
  double objective = 0.0;    // raw sum of squared wrench residuals
  double optimality = 0.0;   // projected gradient infinity norm at exit
  std::vector<double> objective_history;
  bool converged = false;
  double wall_time_s = 0.0;
  std::vector<ThetaParams> iterates;
};

/// Diagnostics of the unconstrained linear solve.
struct LinearSolveInfo {
  int rank = 0;
  double cond = 0.0;  // largest / smallest retained singular value of A
  Vec10 singular_values = Vec10::Zero();
};

/// Minimizer of ||A pi - b||^2 by rank-revealing SVD; rank-deficient systems
/// get the minimum-norm minimizer. Never throws on rank deficiency: the
/// diagnostics carry it.
[[nodiscard]] InertialParams solve_linear(const StackedSystem& system,
                                          LinearSolveInfo* info = nullptr);

/// Chart step with bound clamping: m' = max(mass_floor, m + dm),
/// c' = c + dc, Q' = Q * so3_exp(omega),
/// L' = componentwise max(moment_floor, L + dL).
/// Identity on interior points when z = 0.
[[nodiscard]] ThetaParams retract(const ThetaParams& theta,
                                  const TangentVector& z,
                                  double mass_floor = 1e-9,
                                  double moment_floor = 1e-12);

/// r = A * params_from_theta(theta) - b and the analytic Jacobian of r with
/// respect to the tangent step at z = 0 (chain rule through the parameter
/// map and the rotation chart).
[[nodiscard]] std::pair<Eigen::VectorXd, Eigen::MatrixXd>
residual_and_jacobian(const ThetaParams& theta, const StackedSystem& system);

/// Damped Gauss-Newton on the consistency manifold: solves
/// (J^T J + lambda I) z = -J^T r, retracts, accepts on objective decrease
/// (raising lambda otherwise), stops on grad_tol, step_tol or max_iters.
/// Every accepted iterate, hence the result, maps to a fully consistent pi.
[[nodiscard]] std::pair<ThetaParams, SolveReport> solve_manifold(
    const StackedSystem& system, const ThetaParams& theta0,
    const SolverConfig& config = {});

/// Linear solve followed by the smallest clamping that lands on the
/// manifold: mass to mass_floor, eigenvalues of the COM inertia and the
/// resulting second moments to moment_floor. Reproduces the linear solution
/// exactly when that solution is interior.
[[nodiscard]] ThetaParams initial_guess(const StackedSystem& system,
                                        double mass_floor = 1e-9,
                                        double moment_floor = 1e-12);

}  // namespace ipid
