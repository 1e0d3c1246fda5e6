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


/**
 * @file
 * Least-squares line fits with a 95% confidence interval on the slope.
 */
#pragma once

#include <span>

namespace qcx {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double slope_stderr = 0.0;
  /// Two-sided 95% Student-t interval on the slope.
  double slope_ci_low = 0.0;
  double slope_ci_high = 0.0;
  std::size_t points = 0;
};

/// Throws Domain with fewer than three points or constant x.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace qcx
