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

#include "params.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <string>
#include <vector>

namespace ipid {

namespace {

constexpr double kMassEps = 1e-12;

// Floor applied to degenerate cuboid half-sides (m).
constexpr double kHalfSideFloor = 1e-9;

}  // namespace

void ThetaParams::validate() const {
  if (!(mass >= 0.0) || !std::isfinite(mass)) {
    throw Error(ErrorCode::invalid_argument, "theta mass must be >= 0");
  }
  if (!com.allFinite() || !second_moments.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "theta has non-finite entries");
  }
  if (second_moments.minCoeff() < 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "theta second moments must be componentwise >= 0");
  }
}

Mat3 moment_coupling_matrix() {
  Mat3 p;
  // clang-format off
  p << 0, 1, 1,
       1, 0, 1,
       1, 1, 0;
  // clang-format on
  return p;
}

InertialParams params_from_theta(const ThetaParams& theta) {
  const Vec3 j = moment_coupling_matrix() * theta.second_moments;
  const Mat3& q = theta.orientation.matrix();
  const Mat3 com_skew = skew(theta.com);
  const Mat3 body_inertia =
      q * j.asDiagonal() * q.transpose() - theta.mass * com_skew * com_skew;

  InertialParams pi;
  pi.mass = theta.mass;
  pi.first_moment = theta.mass * theta.com;
  // Symmetric by construction; symmetrize to keep vech exact.
  pi.inertia = vech(0.5 * (body_inertia + body_inertia.transpose()), 1e-6);
  return pi;
}

Mat3 com_inertia(const InertialParams& pi) {
  if (pi.mass <= kMassEps) {
    throw Error(ErrorCode::zero_mass,
                "center of mass undefined for mass <= 1e-12 kg");
  }
  const Vec3 com = pi.first_moment / pi.mass;
  const Mat3 com_skew = skew(com);
  return pi.inertia_matrix() + pi.mass * com_skew * com_skew;
}

PrincipalDecomposition principal_decomposition(const Mat3& com_inertia) {
  if ((com_inertia - com_inertia.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw Error(ErrorCode::not_symmetric,
                "inertia asymmetry exceeds 1e-9");
  }
  const Mat3 sym = 0.5 * (com_inertia + com_inertia.transpose());
  if (sym.cwiseAbs().maxCoeff() == 0.0) {
    // Every frame is principal for the zero matrix; pin the identity so
    // downstream charts are deterministic.
    return PrincipalDecomposition{Rotation::identity(), Vec3::Zero()};
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(sym);

  Mat3 q = eig.eigenvectors();
  if (q.determinant() < 0.0) {
    q.col(2) = -q.col(2);
  }
  PrincipalDecomposition out;
  out.orientation = Rotation::trusted(q);
  out.principal_moments = eig.eigenvalues();
  return out;
}

Vec3 second_moments_from_principal(const Vec3& principal_moments) {
  const Vec3& j = principal_moments;
  return 0.5 * Vec3(-j.x() + j.y() + j.z(),
                    j.x() - j.y() + j.z(),
                    j.x() + j.y() - j.z());
}

ThetaParams theta_from_params(const InertialParams& pi, double tol) {
  if (!pi.to_vector().allFinite()) {
    throw Error(ErrorCode::invalid_argument, "parameters have non-finite entries");
  }
  if (pi.mass < -tol) {
    throw Error(ErrorCode::not_consistent,
                "negative mass: m = " + std::to_string(pi.mass));
  }
  ThetaParams theta;
  if (pi.mass <= kMassEps) {
    // Zero mass forces the zero density; everything else must vanish.
    if (pi.first_moment.cwiseAbs().maxCoeff() > tol ||
        pi.inertia.cwiseAbs().maxCoeff() > tol) {
      throw Error(ErrorCode::not_consistent,
                  "zero mass with nonzero first moment or inertia");
    }
    theta.mass = std::max(pi.mass, 0.0);
    return theta;
  }

  theta.mass = pi.mass;
  theta.com = pi.first_moment / pi.mass;

  const PrincipalDecomposition dec = principal_decomposition(com_inertia(pi));
  Vec3 j = dec.principal_moments;
  const double eig_floor =
      std::max(tol, 1e-10 * j.cwiseAbs().maxCoeff());
  for (int i = 0; i < 3; ++i) {
    if (j(i) < -eig_floor) {
      throw Error(ErrorCode::not_consistent,
                  "center-of-mass inertia has eigenvalue " +
                      std::to_string(j(i)) + " below -" +
                      std::to_string(eig_floor));
    }
    j(i) = std::max(j(i), 0.0);
  }

  Vec3 l = second_moments_from_principal(j);
  for (int i = 0; i < 3; ++i) {
    if (l(i) < -tol) {
      throw Error(ErrorCode::not_consistent,
                  "second moment L(" + std::to_string(i) + ") = " +
                      std::to_string(l(i)) + " violates the triangle "
                      "inequalities beyond tolerance");
    }
    l(i) = std::max(l(i), 0.0);
  }

  theta.orientation = dec.orientation;
  theta.second_moments = l;
  return theta;
}

Cuboid cuboid_from_theta(const ThetaParams& theta) {
  theta.validate();
  if (theta.mass <= kMassEps) {
    throw Error(ErrorCode::zero_mass,
                "cuboid undefined for mass <= 1e-12 kg");
  }
  Cuboid box;
  box.half_sides = (3.0 * theta.second_moments / theta.mass).cwiseSqrt();
  box.center = theta.com;
  box.orientation = theta.orientation;
  const Vec3 thick = box.half_sides.cwiseMax(kHalfSideFloor);
  box.density = theta.mass / (8.0 * thick.x() * thick.y() * thick.z());
  return box;
}

InertialParams params_from_density_grid(const Cuboid& body, int resolution) {
  if (resolution < 2) {
    throw Error(ErrorCode::invalid_argument, "grid resolution must be >= 2");
  }
  const Vec3 d = body.half_sides.cwiseMax(kHalfSideFloor);
  const int n = resolution;
  const Vec3 h = 2.0 * d / static_cast<double>(n);
  const double cell_mass = body.density * h.x() * h.y() * h.z();

  // Slab-wise accumulation with an index-ordered reduction keeps the sums
  // independent of any future parallelization over x-slabs.
  struct Moments {
    double mass = 0.0;
    Vec3 first = Vec3::Zero();
    Mat3 second = Mat3::Zero();
  };
  std::vector<Moments> slabs(static_cast<size_t>(n));

  for (int ix = 0; ix < n; ++ix) {
    Moments& slab = slabs[static_cast<size_t>(ix)];
    const double x = -d.x() + (ix + 0.5) * h.x();
    for (int iy = 0; iy < n; ++iy) {
      const double y = -d.y() + (iy + 0.5) * h.y();
      double sz = 0.0, sz1 = 0.0, sz2 = 0.0;
      for (int iz = 0; iz < n; ++iz) {
        const double z = -d.z() + (iz + 0.5) * h.z();
        sz += 1.0;
        sz1 += z;
        sz2 += z * z;
      }
      slab.mass += sz;
      slab.first += Vec3(x * sz, y * sz, sz1);
      slab.second(0, 0) += x * x * sz;
      slab.second(0, 1) += x * y * sz;
      slab.second(0, 2) += x * sz1;
      slab.second(1, 1) += y * y * sz;
      slab.second(1, 2) += y * sz1;
      slab.second(2, 2) += sz2;
    }
  }

  Moments total;
  for (const Moments& slab : slabs) {
    total.mass += slab.mass;
    total.first += slab.first;
    total.second += slab.second;
  }
  total.mass *= cell_mass;
  total.first *= cell_mass;
  total.second *= cell_mass;
  total.second(1, 0) = total.second(0, 1);
  total.second(2, 0) = total.second(0, 2);
  total.second(2, 1) = total.second(1, 2);

  // Transform the raw moments from the cuboid frame to the body frame:
  // r = Q r~ + c.
  const Mat3& q = body.orientation.matrix();
  const Vec3& c = body.center;
  const double mass = total.mass;
  const Vec3 first_body = q * total.first + mass * c;
  const Mat3 qs = q * total.first * c.transpose();
  const Mat3 second_body =
      q * total.second * q.transpose() + qs + qs.transpose() +
      mass * c * c.transpose();

  InertialParams pi;
  pi.mass = mass;
  pi.first_moment = first_body;
  const Mat3 body_inertia =
      second_body.trace() * Mat3::Identity() - second_body;
  pi.inertia = vech(0.5 * (body_inertia + body_inertia.transpose()), 1e-6);
  return pi;
}

}  // namespace ipid
