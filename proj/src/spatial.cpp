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

#include "spatial.hpp"

#include <Eigen/LU>

#include <cmath>

namespace ipid {

namespace {

constexpr double kRotationTol = 1e-12;

// Below this angle the Rodrigues coefficients switch to their second-order
// Taylor expansions to avoid 0/0.
constexpr double kSmallAngle = 1e-8;

}  // namespace

Rotation Rotation::from_matrix(const Mat3& mat) {
  if (!mat.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "rotation matrix has non-finite entries");
  }
  const Mat3 residual = mat.transpose() * mat - Mat3::Identity();
  if (residual.cwiseAbs().maxCoeff() > kRotationTol) {
    throw Error(ErrorCode::invalid_argument, "matrix is not orthonormal within 1e-12");
  }
  if (std::abs(mat.determinant() - 1.0) > kRotationTol) {
    throw Error(ErrorCode::invalid_argument, "matrix determinant is not 1 within 1e-12");
  }
  return Rotation(mat);
}

Mat3 skew(const Vec3& u) {
  Mat3 s;
  // clang-format off
  s <<      0.0, -u.z(),  u.y(),
        u.z(),      0.0, -u.x(),
       -u.y(),  u.x(),      0.0;
  // clang-format on
  return s;
}

Rotation so3_exp(const Vec3& omega) {
  const double angle = omega.norm();
  if (angle < kSmallAngle) {
    const Mat3 w = skew(omega);
    const double a = 1.0 - angle * angle / 6.0;
    const double b = 0.5 - angle * angle / 24.0;
    return Rotation::trusted(Mat3::Identity() + a * w + b * w * w);
  }
  // Normalized-axis form keeps entries O(1) for large angles.
  const Mat3 k = skew(Vec3(omega / angle));
  const Mat3 r = Mat3::Identity() + std::sin(angle) * k +
                 (1.0 - std::cos(angle)) * k * k;
  return Rotation::trusted(r);
}

Vec3 so3_log(const Rotation& rotation) {
  const Mat3& r = rotation.matrix();
  // vee of the antisymmetric part; its norm is sin(angle).
  const Vec3 v(0.5 * (r(2, 1) - r(1, 2)),
               0.5 * (r(0, 2) - r(2, 0)),
               0.5 * (r(1, 0) - r(0, 1)));
  const double s = v.norm();
  const double c = 0.5 * (r.trace() - 1.0);
  if (c < 0.0 && s < 1e-9) {
    throw Error(ErrorCode::angle_near_pi, "rotation angle within 1e-9 of pi");
  }
  const double angle = std::atan2(s, c);
  if (s < kSmallAngle) {
    // angle/sin(angle) = 1 + angle^2/6 + O(angle^4)
    return (1.0 + angle * angle / 6.0) * v;
  }
  return (angle / s) * v;
}

Mat6 cross_force(const Twist& v) {
  const Mat3 sw = skew(v.angular);
  Mat6 out = Mat6::Zero();
  out.topLeftCorner<3, 3>() = sw;
  out.bottomLeftCorner<3, 3>() = skew(v.linear);
  out.bottomRightCorner<3, 3>() = sw;
  return out;
}

Vec6 vech(const Mat3& m, double tol) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw Error(ErrorCode::not_symmetric, "matrix asymmetry exceeds tolerance");
  }
  Vec6 out;
  out << m(0, 0), m(0, 1), m(0, 2), m(1, 1), m(1, 2), m(2, 2);
  return out;
}

Mat3 unvech(const Vec6& v) {
  Mat3 out;
  // clang-format off
  out << v(0), v(1), v(2),
         v(1), v(3), v(4),
         v(2), v(4), v(5);
  // clang-format on
  return out;
}

}  // namespace ipid
