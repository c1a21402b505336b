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

#include "inertia.hpp"

namespace ipid {

/// Point on the manifold of fully physically consistent parameters:
/// mass m >= 0, center of mass c, rotation Q from the principal-axes frame
/// to the body frame, and nonnegative central second moments of mass L.
/// Every such point maps to a consistent parameter vector.
struct ThetaParams {
  double mass = 0.0;
  Vec3 com = Vec3::Zero();
  Rotation orientation;
  Vec3 second_moments = Vec3::Zero();

  /// Throws Error(invalid_argument) if m < 0 or any L component < 0.
  void validate() const;
};

/// Axis-aligned box in its own principal frame, placed at `center` with
/// orientation `orientation` in the body frame. Uniform density.
struct Cuboid {
  Vec3 half_sides = Vec3::Zero();
  Vec3 center = Vec3::Zero();
  Rotation orientation;
  double density = 0.0;
};

/// Q diag(J) Q' reconstructs the center-of-mass inertia; J ascending.
struct PrincipalDecomposition {
  Rotation orientation;
  Vec3 principal_moments = Vec3::Zero();
};

/// The coupling between central second moments and principal moments:
/// J = P L with P = ones(3,3) - I.
Mat3 moment_coupling_matrix();

/// pi = (m, m c, vech(Q diag(P L) Q' - m S(c) S(c))).
InertialParams params_from_theta(const ThetaParams& theta);

/// Parallel axis theorem: I_C = I_B + m S(c) S(c), c = first_moment / m.
/// Throws Error(zero_mass) for m <= 1e-12.
Mat3 com_inertia(const InertialParams& pi);

/// Eigendecomposition of a symmetric matrix with the orthogonal factor in
/// SO(3) and ascending moments. Throws Error(not_symmetric) if asymmetry
/// exceeds 1e-9.
PrincipalDecomposition principal_decomposition(const Mat3& com_inertia);

/// L = P^-1 J. Components may come out negative; a negative component
/// signals a triangle-inequality violation of J.
Vec3 second_moments_from_principal(const Vec3& principal_moments);

/// Inverse of params_from_theta, defined on consistent parameters.
/// Negative I_C eigenvalues or L components within `tol` (absolute,
/// kg*m^2) are clamped to zero; beyond tol throws Error(not_consistent).
/// Q is recovered only up to the signed-permutation symmetry.
ThetaParams theta_from_params(const InertialParams& pi, double tol = 1e-9);

/// The uniform box realizing theta: half-sides sqrt(3 L / m), density
/// chosen so the total mass equals theta's mass (zero half-sides are
/// thickened to 1e-9 m for the mass computation only).
/// Throws Error(zero_mass) for m <= 1e-12.
Cuboid cuboid_from_theta(const ThetaParams& theta);

/// Midpoint-rule quadrature of the density integrals (mass, first moment,
/// second moment) over the cuboid, on a resolution^3 grid in the cuboid's
/// own frame, transformed to the body frame analytically. Zero half-sides
/// are thickened to 1e-9 m. Deterministic regardless of partitioning.
InertialParams params_from_density_grid(const Cuboid& body, int resolution);

}  // namespace ipid
