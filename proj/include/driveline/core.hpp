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

#ifndef DRIVELINE_CORE_HPP_
#define DRIVELINE_CORE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "driveline/geometry.hpp"

namespace driveline {

struct DegenerateInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct VehicleState {
  Pose2D pose;
  double v = 0.0;               // m/s, >= 0
  double a = 0.0;               // m/s^2
  double steering_angle = 0.0;  // rad
  double timestamp = 0.0;       // s
};

/// One sample of the fixed planner->execution trajectory interface.
struct Curvepoint {
  Pose2D pose;
  double curvature = 0.0;  // 1/m, left turns positive
  double v = 0.0;          // m/s, >= 0
  double a = 0.0;          // m/s^2
};

struct GeodeticOrigin {
  double lat = 0.0;
  double lon = 0.0;
};

/// Spatially equidistant trajectory. `points` holds the first `valid_count`
/// entries of a fixed-capacity interface array; `car_index` splits the array
/// into a history prefix and the part ahead of the vehicle.
struct Trajectory {
  static constexpr std::size_t kDefaultCapacity = 256;

  std::vector<Curvepoint> points;
  double spacing = 0.5;             // m between consecutive points
  double timestamp = 0.0;           // s
  std::uint64_t generation = 0;     // strictly increasing per producer
  std::size_t valid_count = 0;
  GeodeticOrigin reference_point;   // carried, never used in planar math
  std::size_t car_index = 0;
  std::size_t capacity = kDefaultCapacity;
};

enum class ObstacleClass { PEDESTRIAN, BICYCLE, CAR, TRUCK, UNKNOWN };

std::string to_string(ObstacleClass c);

struct Obstacle {
  std::uint64_t id = 0;
  double x = 0.0, y = 0.0, z = 0.0;
  double length = 1.0, width = 1.0, height = 1.0;  // extents, > 0
  double heading = 0.0;
  ObstacleClass classification = ObstacleClass::UNKNOWN;
  double velocity = 0.0;  // m/s
};

// ---------------------------------------------------------------------------
// Trajectory operations
// ---------------------------------------------------------------------------

/// Resamples a polyline into spacing-equidistant curvepoints whose positions
/// lie on the input. Headings and curvatures are zero-initialized; call
/// compute_heading_curvature afterwards. With inclusive_end the final input
/// vertex is appended even when its gap is shorter than spacing.
std::vector<Curvepoint> resample_equidistant(std::span<const Pose2D> polyline, double spacing,
                                             bool inclusive_end = false);

std::vector<Curvepoint> resample_equidistant(std::span<const Vec2> polyline, double spacing,
                                             bool inclusive_end = false);

/// Fills headings (central differences, one-sided at the ends) and curvatures
/// (three-point circumcircle formula, left turns positive) in place.
void compute_heading_curvature(std::vector<Curvepoint> & points);

/// State at arclength s measured from the first point. Position, velocity,
/// acceleration and curvature interpolate linearly; heading along the
/// shortest angular path.
Curvepoint interpolate_state_at(const Trajectory & trajectory, double s);

enum class TrajectoryViolation {
  GENERATION_NOT_INCREASED,
  NON_EQUIDISTANT_SPACING,
  NON_FINITE_FIELD,
  CAR_INDEX_OUT_OF_RANGE,
  VALID_COUNT_OVERFLOW,
};

std::string to_string(TrajectoryViolation v);

struct TrajectoryVerdict {
  std::vector<TrajectoryViolation> violations;
  std::vector<std::string> details;

  bool valid() const { return violations.empty(); }
};

/// Checks the whole point array (prefix included) for the interface
/// invariants: strictly increasing generation, equidistant spacing within
/// 1e-6 m, finite fields, car_index and valid_count in range.
TrajectoryVerdict validate_trajectory(const Trajectory & trajectory,
                                      std::uint64_t prev_generation);

/// Arclength from the first point to the last (spacing * (valid_count - 1)).
double trajectory_length(const Trajectory & trajectory);

/// Positions of all points as a polyline.
std::vector<Vec2> trajectory_positions(const Trajectory & trajectory);

}  // namespace driveline

#endif  // DRIVELINE_CORE_HPP_
