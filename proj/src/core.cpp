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

#include "driveline/core.hpp"

#include <algorithm>
#include <cmath>

namespace driveline {

std::string to_string(ObstacleClass c) {
  switch (c) {
    case ObstacleClass::PEDESTRIAN: return "PEDESTRIAN";
    case ObstacleClass::BICYCLE: return "BICYCLE";
    case ObstacleClass::CAR: return "CAR";
    case ObstacleClass::TRUCK: return "TRUCK";
    case ObstacleClass::UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::vector<Curvepoint> resample_equidistant(std::span<const Vec2> polyline, double spacing,
                                             bool inclusive_end) {
  if (spacing <= 0.0) {
    throw DegenerateInput("resample_equidistant: spacing must be positive");
  }
  if (polyline.size() < 2) {
    throw DegenerateInput("resample_equidistant: polyline needs at least 2 points");
  }
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    if (distance(polyline[i - 1], polyline[i]) < 1e-12) {
      throw DegenerateInput("resample_equidistant: duplicate consecutive points");
    }
  }
  const double total = polyline_length(polyline);
  if (total < spacing) {
    throw DegenerateInput("resample_equidistant: polyline shorter than spacing");
  }

  std::vector<Curvepoint> out;
  out.reserve(static_cast<std::size_t>(total / spacing) + 2);

  Curvepoint first;
  first.pose = Pose2D{polyline[0].x, polyline[0].y, 0.0};
  out.push_back(first);

  std::size_t seg = 0;
  double pos_in_seg = 0.0;  // distance already consumed on segment `seg`
  double remaining = spacing;
  while (seg + 1 < polyline.size()) {
    const Vec2 a = polyline[seg];
    const Vec2 b = polyline[seg + 1];
    const double seg_len = distance(a, b);
    const double left_in_seg = seg_len - pos_in_seg;
    if (left_in_seg >= remaining) {
      pos_in_seg += remaining;
      const double t = pos_in_seg / seg_len;
      Curvepoint cp;
      cp.pose = Pose2D{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t, 0.0};
      out.push_back(cp);
      remaining = spacing;
    } else {
      remaining -= left_in_seg;
      ++seg;
      pos_in_seg = 0.0;
    }
  }
  if (inclusive_end && remaining < spacing - 1e-9) {
    Curvepoint cp;
    cp.pose = Pose2D{polyline.back().x, polyline.back().y, 0.0};
    out.push_back(cp);
  }
  return out;
}

std::vector<Curvepoint> resample_equidistant(std::span<const Pose2D> polyline, double spacing,
                                             bool inclusive_end) {
  std::vector<Vec2> pts;
  pts.reserve(polyline.size());
  for (const auto & p : polyline) {
    pts.push_back(p.position());
  }
  return resample_equidistant(std::span<const Vec2>(pts), spacing, inclusive_end);
}

void compute_heading_curvature(std::vector<Curvepoint> & points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw DegenerateInput("compute_heading_curvature: need at least 3 points");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (distance(points[i - 1].pose.position(), points[i].pose.position()) < 1e-12) {
      throw DegenerateInput("compute_heading_curvature: coincident points");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vec2 d;
    if (i == 0) {
      d = points[1].pose.position() - points[0].pose.position();
    } else if (i + 1 == n) {
      d = points[n - 1].pose.position() - points[n - 2].pose.position();
    } else {
      d = points[i + 1].pose.position() - points[i - 1].pose.position();
    }
    points[i].pose.theta = std::atan2(d.y, d.x);
  }

  // Menger curvature of the triple (i-1, i, i+1); exact 1/R on circles.
  auto menger = [](Vec2 p1, Vec2 p2, Vec2 p3) {
    const double a = distance(p1, p2);
    const double b = distance(p2, p3);
    const double c = distance(p1, p3);
    const double denom = a * b * c;
    if (denom < 1e-12) {
      return 0.0;
    }
    return 2.0 * (p2 - p1).cross(p3 - p2) / denom;
  };
  for (std::size_t i = 1; i + 1 < n; ++i) {
    points[i].curvature = menger(points[i - 1].pose.position(), points[i].pose.position(),
                                 points[i + 1].pose.position());
  }
  points[0].curvature = points[1].curvature;
  points[n - 1].curvature = points[n - 2].curvature;
}

Curvepoint interpolate_state_at(const Trajectory & trajectory, double s) {
  if (trajectory.valid_count == 0) {
    throw OutOfRange("interpolate_state_at: empty trajectory");
  }
  const double max_s = trajectory_length(trajectory);
  if (s < -1e-9 || s > max_s + 1e-9) {
    throw OutOfRange("interpolate_state_at: arclength outside trajectory");
  }
  s = std::clamp(s, 0.0, max_s);
  const double fidx = s / trajectory.spacing;
  std::size_t k = std::min(static_cast<std::size_t>(fidx), trajectory.valid_count - 1);
  if (k + 1 >= trajectory.valid_count) {
    return trajectory.points[trajectory.valid_count - 1];
  }
  const double t = fidx - static_cast<double>(k);
  const Curvepoint & p0 = trajectory.points[k];
  const Curvepoint & p1 = trajectory.points[k + 1];
  Curvepoint out;
  out.pose.x = p0.pose.x + (p1.pose.x - p0.pose.x) * t;
  out.pose.y = p0.pose.y + (p1.pose.y - p0.pose.y) * t;
  out.pose.theta = lerp_angle(p0.pose.theta, p1.pose.theta, t);
  out.curvature = p0.curvature + (p1.curvature - p0.curvature) * t;
  out.v = p0.v + (p1.v - p0.v) * t;
  out.a = p0.a + (p1.a - p0.a) * t;
  return out;
}

std::string to_string(TrajectoryViolation v) {
  switch (v) {
    case TrajectoryViolation::GENERATION_NOT_INCREASED: return "generation not increased";
    case TrajectoryViolation::NON_EQUIDISTANT_SPACING: return "non-equidistant spacing";
    case TrajectoryViolation::NON_FINITE_FIELD: return "non-finite field";
    case TrajectoryViolation::CAR_INDEX_OUT_OF_RANGE: return "car_index out of range";
    case TrajectoryViolation::VALID_COUNT_OVERFLOW: return "valid_count overflow";
  }
  return "unknown";
}

TrajectoryVerdict validate_trajectory(const Trajectory & trajectory,
                                      std::uint64_t prev_generation) {
  TrajectoryVerdict verdict;
  auto add = [&verdict](TrajectoryViolation v, std::string detail) {
    verdict.violations.push_back(v);
    verdict.details.push_back(std::move(detail));
  };

  if (trajectory.generation <= prev_generation) {
    add(TrajectoryViolation::GENERATION_NOT_INCREASED,
        "generation " + std::to_string(trajectory.generation) + " after " +
          std::to_string(prev_generation));
  }
  if (trajectory.valid_count > trajectory.capacity ||
      trajectory.points.size() != trajectory.valid_count) {
    add(TrajectoryViolation::VALID_COUNT_OVERFLOW,
        "valid_count " + std::to_string(trajectory.valid_count) + " vs capacity " +
          std::to_string(trajectory.capacity));
  }
  if (trajectory.valid_count > 0 && trajectory.car_index >= trajectory.valid_count) {
    add(TrajectoryViolation::CAR_INDEX_OUT_OF_RANGE,
        "car_index " + std::to_string(trajectory.car_index));
  }

  bool finite = std::isfinite(trajectory.spacing) && trajectory.spacing > 0.0;
  const std::size_t n = std::min(trajectory.points.size(), trajectory.valid_count);
  for (std::size_t i = 0; i < n; ++i) {
    const Curvepoint & p = trajectory.points[i];
    if (!std::isfinite(p.pose.x) || !std::isfinite(p.pose.y) || !std::isfinite(p.pose.theta) ||
        !std::isfinite(p.curvature) || !std::isfinite(p.v) || !std::isfinite(p.a)) {
      finite = false;
      add(TrajectoryViolation::NON_FINITE_FIELD, "point " + std::to_string(i));
      break;
    }
  }
  if (finite) {
    // prefix and suffix validated alike
    for (std::size_t i = 1; i < n; ++i) {
      const double gap =
        distance(trajectory.points[i - 1].pose.position(), trajectory.points[i].pose.position());
      if (std::abs(gap - trajectory.spacing) > 1e-6) {
        add(TrajectoryViolation::NON_EQUIDISTANT_SPACING,
            "gap " + std::to_string(gap) + " at index " + std::to_string(i));
        break;
      }
    }
  }
  return verdict;
}

double trajectory_length(const Trajectory & trajectory) {
  if (trajectory.valid_count < 2) {
    return 0.0;
  }
  return trajectory.spacing * static_cast<double>(trajectory.valid_count - 1);
}

std::vector<Vec2> trajectory_positions(const Trajectory & trajectory) {
  std::vector<Vec2> out;
  out.reserve(trajectory.valid_count);
  for (std::size_t i = 0; i < trajectory.valid_count; ++i) {
    out.push_back(trajectory.points[i].pose.position());
  }
  return out;
}

}  // namespace driveline
