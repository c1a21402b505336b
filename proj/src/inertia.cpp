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

#include "inertia.hpp"

namespace ipid {

SpatialInertia spatial_inertia_from_params(const InertialParams& pi) {
  const Mat3 first_moment_skew = skew(pi.first_moment);
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>() = pi.mass * Mat3::Identity();
  m.topRightCorner<3, 3>() = -first_moment_skew;
  m.bottomLeftCorner<3, 3>() = first_moment_skew;
  m.bottomRightCorner<3, 3>() = pi.inertia_matrix();
  return SpatialInertia(m);
}

Wrench newton_euler_wrench(const InertialParams& pi, const ProperAcc& a,
                           const Twist& v) {
  const SpatialInertia m = spatial_inertia_from_params(pi);
  const Vec6 twist = (Vec6() << v.linear, v.angular).finished();
  const Vec6 f = m * a.to_vector() + cross_force(v) * (m * twist);
  return Wrench::from_vector(f);
}

}  // namespace ipid
