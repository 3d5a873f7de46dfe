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

#ifndef DRIVELINE_GEOMETRY_HPP_
#define DRIVELINE_GEOMETRY_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace driveline {

inline constexpr double kPi = 3.14159265358979323846;

/// Wraps an angle to (-pi, pi].
inline double normalize_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) {
    a += 2.0 * kPi;
  } else if (a > kPi) {
    a -= 2.0 * kPi;
  }
  return a;
}

/// Signed difference a - b wrapped to (-pi, pi].
inline double angle_diff(double a, double b) { return normalize_angle(a - b); }

/// Interpolates along the shortest angular path, so headings never jump
/// across the +-pi seam.
inline double lerp_angle(double a, double b, double t) {
  return normalize_angle(a + angle_diff(b, a) * t);
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
  Vec2 perp_left() const { return {-y, x}; }
  Vec2 normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
  }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // radians in (-pi, pi]

  Vec2 position() const { return {x, y}; }
  Vec2 direction() const { return {std::cos(theta), std::sin(theta)}; }
};

/// Result of projecting a point onto a polyline.
struct PolylineProjection {
  double s = 0.0;              // arclength of the foot point
  double distance = 0.0;       // unsigned distance to the polyline
  double signed_lateral = 0.0; // positive when the point is left of travel
  std::size_t segment = 0;     // index of the segment containing the foot
  double heading = 0.0;        // heading of that segment
};

double polyline_length(std::span<const Vec2> pts);

/// Point at arclength s (clamped to [0, length]).
Vec2 polyline_point_at(std::span<const Vec2> pts, double s);

double polyline_heading_at(std::span<const Vec2> pts, double s);

PolylineProjection project_point(std::span<const Vec2> pts, Vec2 p);

/// Signed shoelace area (positive for counter-clockwise rings).
double polygon_area(std::span<const Vec2> ring);

/// Crossing-number test; points on the boundary count as inside.
bool point_in_polygon(std::span<const Vec2> ring, Vec2 p);

bool segments_intersect(Vec2 a1, Vec2 a2, Vec2 b1, Vec2 b2);

/// True when no two non-adjacent edges of the closed ring intersect.
bool polygon_is_simple(std::span<const Vec2> ring);

/// Offsets every vertex along the local left normal (miter joins). Negative
/// offsets move right.
std::vector<Vec2> offset_polyline(std::span<const Vec2> pts, double offset_left);

/// Axis-aligned rectangle footprint expanded around a pose. ref_offset shifts
/// the geometric center forward of the pose along its heading.
std::vector<Vec2> rectangle_footprint(const Pose2D & pose, double length, double width,
                                      double ref_offset = 0.0);

}  // namespace driveline

#endif  // DRIVELINE_GEOMETRY_HPP_
