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

#ifndef DRIVELINE_KERNELS_HPP_
#define DRIVELINE_KERNELS_HPP_

#include <cstddef>
#include <string>

// Data-parallel inner loops of the pipeline. Every kernel has a scalar
// reference implementation and an AVX2 variant selected at runtime; the two
// are bit-identical (no FMA contraction on either path), so dispatch never
// changes results.

namespace driveline::kernels {

enum class Isa { SCALAR, AVX2 };

/// Widest instruction set the host supports.
Isa detect_isa();

/// Currently dispatched instruction set.
Isa active_isa();

/// Overrides dispatch (test hook; pass detect_isa() to restore).
void force_isa(Isa isa);

std::string to_string(Isa isa);

/// One particle-swarm update over a flattened coordinate block:
///   vel[i] = w*vel[i] + (c1*r1[i])*(pbest[i]-x[i]) + (c2*r2[i])*(gbest[i]-x[i])
///   x[i]   = clamp(x[i]+vel[i], lo[i], hi[i])
void swarm_update(double * x, double * vel, const double * pbest, const double * gbest,
                  const double * r1, const double * r2, const double * lo, const double * hi,
                  double w, double c1, double c2, std::size_t n);

/// Spatial speed profile v[i] = sqrt(max(0, v0_sq - two_b * s[i])). Braking
/// uses two_b > 0; an acceleration ramp passes two_b < 0.
void speed_profile(const double * s, double * v, std::size_t n, double v0_sq, double two_b);

namespace detail {
void swarm_update_scalar(double * x, double * vel, const double * pbest, const double * gbest,
                         const double * r1, const double * r2, const double * lo,
                         const double * hi, double w, double c1, double c2, std::size_t n);
void swarm_update_avx2(double * x, double * vel, const double * pbest, const double * gbest,
                       const double * r1, const double * r2, const double * lo, const double * hi,
                       double w, double c1, double c2, std::size_t n);
void speed_profile_scalar(const double * s, double * v, std::size_t n, double v0_sq, double two_b);
void speed_profile_avx2(const double * s, double * v, std::size_t n, double v0_sq, double two_b);
}  // namespace detail

}  // namespace driveline::kernels

#endif  // DRIVELINE_KERNELS_HPP_
