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

#include <vector>

namespace ipid {

/// One wrench/motion measurement: the proper acceleration and twist that
/// excited the body, the wrench it responded with, and the sample time
/// (metadata only, never used by the solvers).
struct Sample {
  ProperAcc a;
  Twist v;
  Wrench f;
  double t = 0.0;  // s
};

/// Dense least-squares system A x = b stacked from per-sample regressors.
/// Rows are ordered (force_x..z, moment_x..z) per sample, samples in input
/// order, so serialized systems reproduce bit-for-bit across runs.
struct StackedSystem {
  Eigen::MatrixXd A;  // (6N) x 10
  Eigen::VectorXd b;  // 6N
  int sample_count = 0;
};

/// 6x10 matrix Y with Y*pi = newton_euler_wrench(pi, a, v) for every pi.
/// Column i is the wrench response of the i-th canonical basis parameter
/// vector, so the identity holds by construction.
[[nodiscard]] RegressorMatrix regressor(const ProperAcc& a, const Twist& v);

/// Stacks regressors and measured wrenches; ||A pi - b||^2 is the summed
/// squared wrench residual over the set.
/// Throws Error(empty_set) when samples is empty.
[[nodiscard]] StackedSystem stack(const std::vector<Sample>& samples);

}  // namespace ipid
