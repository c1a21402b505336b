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

#include "solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include <algorithm>
#include <chrono>

namespace ipid {

namespace {

constexpr double kDampingMin = 1e-12;
constexpr double kDampingMax = 1e6;

using Mat10 = Eigen::Matrix<double, 10, 10>;

// Writes the six unique entries of a symmetric matrix into rows 4..9 of the
// given Jacobian column, in (xx, xy, xz, yy, yz, zz) order.
void set_inertia_rows(Mat10& d, int col, const Mat3& s) {
  d(4, col) = s(0, 0);
  d(5, col) = 0.5 * (s(0, 1) + s(1, 0));
  d(6, col) = 0.5 * (s(0, 2) + s(2, 0));
  d(7, col) = s(1, 1);
  d(8, col) = 0.5 * (s(1, 2) + s(2, 1));
  d(9, col) = s(2, 2);
}

// d pi_p / dz at z = 0: the derivative of the parameter map through the
// chart (m + dm, c + dc, Q exp(omega^), L + dL).
Mat10 chart_jacobian(const ThetaParams& theta) {
  Mat10 d = Mat10::Zero();
  const double m = theta.mass;
  const Vec3& c = theta.com;
  const Mat3 q = theta.orientation.matrix();
  const Mat3 sc = skew(c);
  const Vec3 principal = moment_coupling_matrix() * theta.second_moments;
  const Mat3 diag_j = principal.asDiagonal();

  d(0, 0) = 1.0;
  d.block<3, 1>(1, 0) = c;
  set_inertia_rows(d, 0, Mat3(-(sc * sc)));

  for (int j = 0; j < 3; ++j) {
    d(1 + j, 1 + j) = m;
    const Mat3 se = skew(Vec3::Unit(j));
    set_inertia_rows(d, 1 + j, Mat3(-m * (se * sc + sc * se)));
  }

  for (int j = 0; j < 3; ++j) {
    const Mat3 se = skew(Vec3::Unit(j));
    set_inertia_rows(d, 4 + j, Mat3(q * (se * diag_j - diag_j * se) * q.transpose()));
  }

  const Mat3 p = moment_coupling_matrix();
  for (int j = 0; j < 3; ++j) {
    const Mat3 dl = Vec3(p.col(j)).asDiagonal();
    set_inertia_rows(d, 7 + j, Mat3(q * dl * q.transpose()));
  }
  return d;
}

double objective_at(const ThetaParams& theta, const StackedSystem& system) {
  const Vec10 pi = params_from_theta(theta).to_vector();
  return (system.A * pi - system.b).squaredNorm();
}

// Gradient of ||r||^2 with components zeroed where a lower bound is active
// and the gradient points out of the feasible box.
Vec10 projected_gradient(const Vec10& grad, const ThetaParams& theta,
                         const SolverConfig& config) {
  Vec10 pg = grad;
  if (theta.mass <= config.mass_floor) {
    pg(0) = std::min(pg(0), 0.0);
  }
  for (int j = 0; j < 3; ++j) {
    if (theta.second_moments(j) <= config.moment_floor) {
      pg(7 + j) = std::min(pg(7 + j), 0.0);
    }
  }
  return pg;
}

}  // namespace

Vec10 TangentVector::to_vector() const {
  Vec10 z;
  z(0) = dm;
  z.segment<3>(1) = dc;
  z.segment<3>(4) = omega;
  z.segment<3>(7) = dL;
  return z;
}

TangentVector TangentVector::from_vector(const Vec10& z) {
  TangentVector t;
  t.dm = z(0);
  t.dc = z.segment<3>(1);
  t.omega = z.segment<3>(4);
  t.dL = z.segment<3>(7);
  return t;
}

InertialParams solve_linear(const StackedSystem& system,
                            LinearSolveInfo* info) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(
      system.A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd x = svd.solve(system.b);
  if (info != nullptr) {
    info->rank = static_cast<int>(svd.rank());
    info->singular_values.setZero();
    const auto& sv = svd.singularValues();
    for (int i = 0; i < sv.size() && i < 10; ++i) {
      info->singular_values(i) = sv(i);
    }
    info->cond = info->rank > 0 ? sv(0) / sv(info->rank - 1) : 0.0;
  }
  return InertialParams::from_vector(x);
}

ThetaParams retract(const ThetaParams& theta, const TangentVector& z,
                    double mass_floor, double moment_floor) {
  ThetaParams out;
  out.mass = std::max(mass_floor, theta.mass + z.dm);
  out.com = theta.com + z.dc;
  out.orientation = theta.orientation * so3_exp(z.omega);
  out.second_moments =
      (theta.second_moments + z.dL).cwiseMax(moment_floor);
  return out;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> residual_and_jacobian(
    const ThetaParams& theta, const StackedSystem& system) {
  const Vec10 pi = params_from_theta(theta).to_vector();
  Eigen::VectorXd r = system.A * pi - system.b;
  Eigen::MatrixXd jac = system.A * chart_jacobian(theta);
  return {std::move(r), std::move(jac)};
}

std::pair<ThetaParams, SolveReport> solve_manifold(
    const StackedSystem& system, const ThetaParams& theta0,
    const SolverConfig& config) {
  const auto t_start = std::chrono::steady_clock::now();
  ThetaParams theta = theta0;
  theta.validate();

  SolveReport report;
  auto [r, jac] = residual_and_jacobian(theta, system);
  double objective = r.squaredNorm();
  Mat10 jtj = jac.transpose() * jac;
  Vec10 jtr = jac.transpose() * r;
  report.objective_history.push_back(objective);
  if (config.record_iterates) {
    report.iterates.push_back(theta);
  }

  double lambda = config.damping0;
  Vec10 pg = projected_gradient(2.0 * jtr, theta, config);

  while (report.iterations < config.max_iters) {
    if (pg.lpNorm<Eigen::Infinity>() <= config.grad_tol) {
      report.converged = true;
      break;
    }
    Mat10 h = jtj;
    h.diagonal().array() += lambda;
    const Vec10 zvec = h.ldlt().solve(Vec10(-jtr));
    ++report.iterations;
    const TangentVector z = TangentVector::from_vector(zvec);
    const ThetaParams candidate =
        retract(theta, z, config.mass_floor, config.moment_floor);
    const double candidate_objective = objective_at(candidate, system);
    if (candidate_objective < objective) {
      theta = candidate;
      objective = candidate_objective;
      std::tie(r, jac) = residual_and_jacobian(theta, system);
      jtj = jac.transpose() * jac;
      jtr = jac.transpose() * r;
      pg = projected_gradient(2.0 * jtr, theta, config);
      report.objective_history.push_back(objective);
      if (config.record_iterates) {
        report.iterates.push_back(theta);
      }
      lambda = std::max(lambda / 10.0, kDampingMin);
      if (zvec.lpNorm<Eigen::Infinity>() <= config.step_tol) {
        report.converged = true;
        break;
      }
    } else {
      if (lambda >= kDampingMax) {
        break;  // no acceptable step at maximum damping
      }
      lambda = std::min(lambda * 10.0, kDampingMax);
    }
  }

  report.objective = objective;
  report.optimality = pg.lpNorm<Eigen::Infinity>();
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return {theta, report};
}

ThetaParams initial_guess(const StackedSystem& system, double mass_floor,
                          double moment_floor) {
  const InertialParams pi = solve_linear(system);
  ThetaParams theta;
  theta.mass = std::max(pi.mass, mass_floor);
  theta.com = pi.first_moment / theta.mass;
  const Mat3 sc = skew(theta.com);
  const Mat3 about_com = unvech(pi.inertia) + theta.mass * sc * sc;
  const PrincipalDecomposition pd = principal_decomposition(about_com);
  theta.orientation = pd.orientation;
  const Vec3 clamped = pd.principal_moments.cwiseMax(moment_floor);
  theta.second_moments =
      second_moments_from_principal(clamped).cwiseMax(moment_floor);
  return theta;
}

}  // namespace ipid
