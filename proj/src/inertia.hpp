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

#include "spatial.hpp"

namespace ipid {

/// The 10 inertial parameters of a rigid body: mass (kg), first moment of
/// mass m*c (kg*m), and the six unique entries of the body-frame inertia
/// matrix (kg*m^2) in vech order (xx, xy, xz, yy, yz, zz).
///
/// No consistency is required here; raw identification output lives in this
/// type whether or not a physical body could generate it.
struct InertialParams {
  double mass = 0.0;
  Vec3 first_moment = Vec3::Zero();
  Vec6 inertia = Vec6::Zero();

  Mat3 inertia_matrix() const { return unvech(inertia); }

  Vec10 to_vector() const {
    Vec10 out;
    out << mass, first_moment, inertia;
    return out;
  }

  static InertialParams from_vector(const Vec10& v) {
    InertialParams out;
    out.mass = v(0);
    out.first_moment = v.segment<3>(1);
    out.inertia = v.tail<6>();
    return out;
  }
};

/// The 6x6 inertia coupling proper acceleration to wrench. Always built
/// from an InertialParams vector, so the block structure
/// [[m*I, -S(mc)], [S(mc), I_B]] holds by construction.
class SpatialInertia {
 public:
  const Mat6& matrix() const { return mat_; }

  Vec6 operator*(const Vec6& v) const { return mat_ * v; }

  friend SpatialInertia spatial_inertia_from_params(const InertialParams& pi);

 private:
  explicit SpatialInertia(const Mat6& mat) : mat_(mat) {}

  Mat6 mat_;
};

/// Builds the spatial inertia from pi. Works on any parameter vector,
/// consistent or not; the first moment is used directly (no division by m).
SpatialInertia spatial_inertia_from_params(const InertialParams& pi);

/// f = M a^g + v x* M v.
Wrench newton_euler_wrench(const InertialParams& pi, const ProperAcc& a,
                           const Twist& v);

}  // namespace ipid
