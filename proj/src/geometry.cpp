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

#include "driveline/geometry.hpp"

#include <algorithm>
#include <limits>

namespace driveline {

double polyline_length(std::span<const Vec2> pts) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    len += distance(pts[i - 1], pts[i]);
  }
  return len;
}

Vec2 polyline_point_at(std::span<const Vec2> pts, double s) {
  if (pts.empty()) {
    return {};
  }
  if (s <= 0.0) {
    return pts.front();
  }
  double acc = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double seg = distance(pts[i - 1], pts[i]);
    if (acc + seg >= s && seg > 0.0) {
      const double t = (s - acc) / seg;
      return pts[i - 1] + (pts[i] - pts[i - 1]) * t;
    }
    acc += seg;
  }
  return pts.back();
}

double polyline_heading_at(std::span<const Vec2> pts, double s) {
  if (pts.size() < 2) {
    return 0.0;
  }
  double acc = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double seg = distance(pts[i - 1], pts[i]);
    if ((acc + seg >= s || i + 1 == pts.size()) && seg > 0.0) {
      const Vec2 d = pts[i] - pts[i - 1];
      return std::atan2(d.y, d.x);
    }
    acc += seg;
  }
  const Vec2 d = pts.back() - pts[pts.size() - 2];
  return std::atan2(d.y, d.x);
}

PolylineProjection project_point(std::span<const Vec2> pts, Vec2 p) {
  PolylineProjection best;
  best.distance = std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Vec2 a = pts[i - 1];
    const Vec2 b = pts[i];
    const Vec2 ab = b - a;
    const double seg_len2 = ab.squared_norm();
    double t = 0.0;
    if (seg_len2 > 0.0) {
      t = std::clamp((p - a).dot(ab) / seg_len2, 0.0, 1.0);
    }
    const Vec2 foot = a + ab * t;
    const double d = distance(p, foot);
    if (d < best.distance) {
      const double seg_len = std::sqrt(seg_len2);
      best.distance = d;
      best.s = acc + t * seg_len;
      best.segment = i - 1;
      best.heading = std::atan2(ab.y, ab.x);
      const double side = ab.cross(p - a);
      best.signed_lateral = side >= 0.0 ? d : -d;
    }
    acc += distance(a, b);
  }
  return best;
}

double polygon_area(std::span<const Vec2> ring) {
  double twice = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = ring[i];
    const Vec2 b = ring[(i + 1) % n];
    twice += a.cross(b);
  }
  return 0.5 * twice;
}

bool point_in_polygon(std::span<const Vec2> ring, Vec2 p) {
  const std::size_t n = ring.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = ring[j];
    const Vec2 b = ring[i];
    // boundary hit counts as inside
    const Vec2 ab = b - a;
    const double cr = ab.cross(p - a);
    if (std::abs(cr) < 1e-12 && (p - a).dot(p - b) <= 1e-12) {
      return true;
    }
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x_int = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < x_int) {
        inside = !inside;
      }
    }
  }
  return inside;
}

namespace {

int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = (b - a).cross(c - a);
  if (v > 1e-12) return 1;
  if (v < -1e-12) return -1;
  return 0;
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
         std::min(a.y, b.y) - 1e-12 <= p.y && p.y <= std::max(a.y, b.y) + 1e-12;
}

}  // namespace

bool segments_intersect(Vec2 a1, Vec2 a2, Vec2 b1, Vec2 b2) {
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);
  if (o1 != o2 && o3 != o4) {
    return true;
  }
  if (o1 == 0 && on_segment(a1, a2, b1)) return true;
  if (o2 == 0 && on_segment(a1, a2, b2)) return true;
  if (o3 == 0 && on_segment(b1, b2, a1)) return true;
  if (o4 == 0 && on_segment(b1, b2, a2)) return true;
  return false;
}

bool polygon_is_simple(std::span<const Vec2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a1 = ring[i];
    const Vec2 a2 = ring[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // skip edges sharing a vertex
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) {
        continue;
      }
      const Vec2 b1 = ring[j];
      const Vec2 b2 = ring[(j + 1) % n];
      if (segments_intersect(a1, a2, b1, b2)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Vec2> offset_polyline(std::span<const Vec2> pts, double offset_left) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 dir;
    if (i == 0) {
      dir = (pts[1] - pts[0]).normalized();
    } else if (i + 1 == n) {
      dir = (pts[n - 1] - pts[n - 2]).normalized();
    } else {
      dir = ((pts[i] - pts[i - 1]).normalized() + (pts[i + 1] - pts[i]).normalized()).normalized();
      if (dir.norm() == 0.0) {
        dir = (pts[i + 1] - pts[i - 1]).normalized();
      }
    }
    out.push_back(pts[i] + dir.perp_left() * offset_left);
  }
  return out;
}

std::vector<Vec2> rectangle_footprint(const Pose2D & pose, double length, double width,
                                      double ref_offset) {
  const Vec2 dir = pose.direction();
  const Vec2 left = dir.perp_left();
  const Vec2 center = pose.position() + dir * ref_offset;
  const double hl = 0.5 * length;
  const double hw = 0.5 * width;
  return {
    center + dir * hl + left * hw,
    center - dir * hl + left * hw,
    center - dir * hl - left * hw,
    center + dir * hl - left * hw,
  };
}

}  // namespace driveline
