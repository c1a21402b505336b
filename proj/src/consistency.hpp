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

#include <string>
#include <utility>

namespace ipid {

/// Structured verdict of the two consistency conditions with per-condition
/// residuals.
///
/// The two conditions, in increasing strength:
///   physical:         m >= -tol and I_C positive semidefinite within tol.
///   fully consistent: additionally every central second moment
///                     L = P^-1 eig(I_C) >= -tol, equivalent to the existence
///                     of a nonnegative generating density; implies the
///                     triangle inequalities on the principal moments.
///
/// In the degenerate regime m <= 1e-12 the flags tighten: the only inertia
/// compatible with (near) zero mass is zero, so com_inertia_psd_ok means the
/// rotational block vanishes within tol and triangle_ok additionally means
/// the first moment vanishes within tol.
struct ConsistencyReport {
  bool mass_ok = false;
  bool com_inertia_psd_ok = false;
  bool triangle_ok = false;
  double mass = 0.0;                      // kg
  Vec3 principal_moments = Vec3::Zero();  // J = eig(I_C), ascending (kg*m^2)
  Vec3 second_moments = Vec3::Zero();     // L = P^-1 J (kg*m^2)
  double min_eigenvalue = 0.0;            // min(J) (kg*m^2)
  double worst_triangle_slack = 0.0;      // min triangle residual = 2 min(L)
  double tolerance = 0.0;                 // tol the verdict was taken at

  [[nodiscard]] bool physical() const { return mass_ok && com_inertia_psd_ok; }
  [[nodiscard]] bool fully_consistent() const {
    return mass_ok && com_inertia_psd_ok && triangle_ok;
  }
};

/// Weaker check: m >= -tol and all eigenvalues of I_C >= -tol.
/// For m <= 1e-12 true iff the whole rotational inertia block is within tol
/// of zero. Verdicts are returned, never thrown: identification pipelines
/// log inconsistent intermediate results instead of aborting.
[[nodiscard]] std::pair<bool, ConsistencyReport> check_physical(
    const InertialParams& pi, double tol = 1e-9);

/// Stronger check: m >= -tol and every component of L >= -tol.
/// True implies check_physical true. For m <= 1e-12 true iff every parameter
/// is within tol of zero (zero mass forces the zero density).
[[nodiscard]] std::pair<bool, ConsistencyReport> check_full_physical(
    const InertialParams& pi, double tol = 1e-9);

/// (J_y+J_z-J_x, J_x+J_z-J_y, J_x+J_y-J_z) = 2 L; all >= 0 iff the triangle
/// inequalities hold.
[[nodiscard]] Vec3 triangle_residuals(const Vec3& principal_moments);

/// Human-readable multi-line block.
std::string to_text(const ConsistencyReport& report);

/// Machine-readable "key = value" lines, one per field.
std::string to_key_values(const ConsistencyReport& report);

}  // namespace ipid
