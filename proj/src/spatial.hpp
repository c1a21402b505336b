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

#include "types.hpp"

namespace ipid {

/// Element of SO(3). Construction from a raw matrix is validated
/// (orthonormality and determinant within 1e-12); products and the
/// exponential map produce trusted instances without re-checking.
class Rotation {
 public:
  Rotation() : mat_(Mat3::Identity()) {}

  /// Validates R'R = I and det(R) = 1 within 1e-12 elementwise.
  static Rotation from_matrix(const Mat3& mat);

  /// No validation; for matrices orthonormal by construction.
  static Rotation trusted(const Mat3& mat) { return Rotation(mat); }

  static Rotation identity() { return Rotation(); }

  const Mat3& matrix() const { return mat_; }

  Rotation inverse() const { return Rotation(mat_.transpose()); }

  Rotation operator*(const Rotation& other) const {
    return Rotation(mat_ * other.mat_);
  }

  Vec3 operator*(const Vec3& v) const { return mat_ * v; }

 private:
  explicit Rotation(const Mat3& mat) : mat_(mat) {}

  Mat3 mat_;
};

/// Body velocity: linear part in m/s, angular part in rad/s.
struct Twist {
  Vec3 linear = Vec3::Zero();
  Vec3 angular = Vec3::Zero();

  Vec6 to_vector() const {
    Vec6 out;
    out << linear, angular;
    return out;
  }
};

/// Force/moment pair applied to the body, in the body frame.
struct Wrench {
  Vec3 force = Vec3::Zero();
  Vec3 moment = Vec3::Zero();

  Vec6 to_vector() const {
    Vec6 out;
    out << force, moment;
    return out;
  }

  static Wrench from_vector(const Vec6& v) {
    return Wrench{v.head<3>(), v.tail<3>()};
  }
};

/// Proper body acceleration: twist derivative minus gravity, so a static
/// body hanging in gravity has a nonzero linear part.
struct ProperAcc {
  Vec3 linear = Vec3::Zero();
  Vec3 angular = Vec3::Zero();

  Vec6 to_vector() const {
    Vec6 out;
    out << linear, angular;
    return out;
  }
};

/// Skew-symmetric matrix such that skew(u) * v = u x v.
Mat3 skew(const Vec3& u);

/// Rodrigues exponential map; ||omega|| is the rotation angle.
Rotation so3_exp(const Vec3& omega);

/// Inverse of so3_exp. Throws Error(angle_near_pi) when the rotation angle
/// is within 1e-9 of pi, where the log branch is ambiguous.
Vec3 so3_log(const Rotation& rotation);

/// 6D force cross product operator: [[S(w), 0], [S(v), S(w)]] with v the
/// linear and w the angular part of the twist.
Mat6 cross_force(const Twist& v);

/// Serializes a symmetric matrix as (xx, xy, xz, yy, yz, zz).
/// Throws Error(not_symmetric) if asymmetry exceeds tol.
Vec6 vech(const Mat3& m, double tol = 1e-9);

/// Inverse of vech.
Mat3 unvech(const Vec6& v);

}  // namespace ipid
