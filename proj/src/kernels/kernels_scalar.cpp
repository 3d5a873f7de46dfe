// Copyright 2026 Driveline Contributors
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

// Reference kernels. Compiled with -ffp-contract=off so the operation
// sequence matches the AVX2 variant exactly (mul, mul, mul, add, add per
// lane, never a fused multiply-add).

#include <algorithm>
#include <cmath>

#include "driveline/kernels.hpp"

namespace driveline::kernels::detail {

void swarm_update_scalar(double * x, double * vel, const double * pbest, const double * gbest,
                         const double * r1, const double * r2, const double * lo,
                         const double * hi, double w, double c1, double c2, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double cognitive = (c1 * r1[i]) * (pbest[i] - x[i]);
    const double social = (c2 * r2[i]) * (gbest[i] - x[i]);
    const double v = (w * vel[i] + cognitive) + social;
    vel[i] = v;
    x[i] = std::min(std::max(x[i] + v, lo[i]), hi[i]);
  }
}

void speed_profile_scalar(const double * s, double * v, std::size_t n, double v0_sq,
                          double two_b) {
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = std::sqrt(std::max(0.0, v0_sq - two_b * s[i]));
  }
}

}  // namespace driveline::kernels::detail
