// Copyright 2026 The qcx Authors
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

#include <random>

namespace qcx {

template <class Rng>
Mat2 random_su2(Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Vector4d v;
  for (int k = 0; k < 4; ++k) v(k) = gauss(rng);
  v.normalize();
  const Complex i{0.0, 1.0};
  Mat2 u;
  u << v(0) - i * v(3), -i * v(1) - v(2), -i * v(1) + v(2), v(0) + i * v(3);
  return u;
}

}  // namespace qcx
