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

#include "regressor.hpp"

namespace ipid {

RegressorMatrix regressor(const ProperAcc& a, const Twist& v) {
  RegressorMatrix y;
  Vec10 basis = Vec10::Zero();
  for (int i = 0; i < 10; ++i) {
    basis(i) = 1.0;
    const InertialParams pi = InertialParams::from_vector(basis);
    y.col(i) = newton_euler_wrench(pi, a, v).to_vector();
    basis(i) = 0.0;
  }
  return y;
}

StackedSystem stack(const std::vector<Sample>& samples) {
  if (samples.empty()) {
    throw Error(ErrorCode::empty_set, "stack: no samples");
  }
  StackedSystem system;
  system.sample_count = static_cast<int>(samples.size());
  system.A.resize(6 * system.sample_count, 10);
  system.b.resize(6 * system.sample_count);
  for (int i = 0; i < system.sample_count; ++i) {
    const Sample& s = samples[static_cast<size_t>(i)];
    system.A.block<6, 10>(6 * i, 0) = regressor(s.a, s.v);
    system.b.segment<6>(6 * i) = s.f.to_vector();
  }
  return system;
}

}  // namespace ipid
