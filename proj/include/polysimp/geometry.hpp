// Copyright 2026 The polysimp Authors
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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "polysimp/errors.hpp"

namespace polysimp {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Point2<double>;
using Vector = Vector2<double>;

template <typename Scalar>
inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

template <typename Scalar>
inline constexpr Scalar kTwoPi = Scalar(2) * std::numbers::pi_v<Scalar>;

/// z-component of the 3D cross product of two planar vectors.
template <typename Derived1, typename Derived2>
inline auto cross(const Eigen::MatrixBase<Derived1>& a,
                  const Eigen::MatrixBase<Derived2>& b)
{
  return a.x() * b.y() - a.y() * b.x();
}

template <typename Scalar>
inline bool is_finite(const Point2<Scalar>& p)
{
  return std::isfinite(p.x()) && std::isfinite(p.y());
}

template <typename Scalar>
struct Segment
{
  Point2<Scalar> start;
  Point2<Scalar> end;

  Vector2<Scalar> vector() const { return end - start; }
  Scalar length() const { return (end - start).norm(); }
};

/// Infinite line through `point` along `direction` (not normalized).
template <typename Scalar>
struct Line
{
  Point2<Scalar> point;
  Vector2<Scalar> direction;

  static Line through(const Segment<Scalar>& s) { return {s.start, s.vector()}; }
};

/// Absolute bearing of a segment, in [0, 2pi).
template <typename Scalar>
struct DirectionAngle
{
  Scalar radians = 0;

  static DirectionAngle wrapped(Scalar a)
  {
    a = std::fmod(a, kTwoPi<Scalar>);
    if (a < 0)
      a += kTwoPi<Scalar>;
    if (a >= kTwoPi<Scalar>)
      a = 0;
    return {a};
  }

  Vector2<Scalar> unit() const { return {std::cos(radians), std::sin(radians)}; }
};

/// Angle on the interior (left) side of a counterclockwise vertex, in (0, 2pi).
/// Convex < pi, reflex > pi.
template <typename Scalar>
struct InteriorAngle
{
  Scalar radians = 0;

  bool is_convex() const { return radians < kPi<Scalar>; }
  bool is_reflex() const { return radians > kPi<Scalar>; }
};

/// Unchecked interior angle at `at`, in [0, 2pi]. Exact reversals yield 0 or 2pi.
template <typename Scalar>
inline Scalar turn_interior_angle(const Point2<Scalar>& prev, const Point2<Scalar>& at,
                                  const Point2<Scalar>& next)
{
  const Vector2<Scalar> in = at - prev;
  const Vector2<Scalar> out = next - at;
  const Scalar turn = std::atan2(cross(in, out), in.dot(out));
  return kPi<Scalar> - turn;
}

/// Smallest separation between two interior angles, in [0, pi].
template <typename Scalar>
inline Scalar angle_difference(InteriorAngle<Scalar> a, InteriorAngle<Scalar> b)
{
  const Scalar d = std::abs(a.radians - b.radians);
  return std::min(d, kTwoPi<Scalar> - d);
}

template <typename Scalar>
inline bool is_degenerate(const Segment<Scalar>& s)
{
  const Scalar scale = s.start.template lpNorm<Eigen::Infinity>() +
                       s.end.template lpNorm<Eigen::Infinity>();
  return s.length() <= Scalar(1e-12) * scale || s.length() == Scalar(0);
}

template <typename Scalar>
inline DirectionAngle<Scalar> direction_angle(const Segment<Scalar>& s)
{
  if (is_degenerate(s))
    throw GeometryError(ErrorCode::DegenerateSegment, "zero-length segment has no direction");
  const Vector2<Scalar> d = s.vector();
  return DirectionAngle<Scalar>::wrapped(std::atan2(d.y(), d.x()));
}

template <typename Scalar>
inline Point2<Scalar> point_along(const Segment<Scalar>& s, Scalar r)
{
  if (!(r >= 0 && r <= 1))
    throw GeometryError(ErrorCode::ParameterOutOfRange,
                        "point_along ratio " + std::to_string(r) + " outside [0, 1]");
  return s.start + r * (s.end - s.start);
}

/// Intersection of two supporting lines, or nullopt when they are parallel.
template <typename Scalar>
inline std::optional<Point2<Scalar>> line_intersection(const Line<Scalar>& l1,
                                                       const Line<Scalar>& l2)
{
  const Scalar denom = cross(l1.direction, l2.direction);
  if (std::abs(denom) <= Scalar(1e-12) * l1.direction.norm() * l2.direction.norm())
    return std::nullopt;
  const Scalar t = cross(l2.point - l1.point, l2.direction) / denom;
  return Point2<Scalar>(l1.point + t * l1.direction);
}

/// Distance from `q` to the closed segment.
template <typename Scalar>
inline Scalar point_segment_distance(const Segment<Scalar>& s, const Point2<Scalar>& q)
{
  const Vector2<Scalar> d = s.vector();
  const Scalar len2 = d.squaredNorm();
  if (len2 == Scalar(0))
    return (q - s.start).norm();
  const Scalar t = std::clamp((q - s.start).dot(d) / len2, Scalar(0), Scalar(1));
  return (q - (s.start + t * d)).norm();
}

/// Proper or touching intersection test between two closed segments.
template <typename Scalar>
inline bool segments_intersect(const Segment<Scalar>& a, const Segment<Scalar>& b)
{
  auto orient = [](const Point2<Scalar>& p, const Point2<Scalar>& q, const Point2<Scalar>& r) {
    const Scalar c = cross(q - p, r - p);
    return (c > 0) - (c < 0);
  };
  auto on_segment = [](const Point2<Scalar>& p, const Point2<Scalar>& q, const Point2<Scalar>& r) {
    return std::min(p.x(), q.x()) <= r.x() && r.x() <= std::max(p.x(), q.x()) &&
           std::min(p.y(), q.y()) <= r.y() && r.y() <= std::max(p.y(), q.y());
  };
  const int o1 = orient(a.start, a.end, b.start);
  const int o2 = orient(a.start, a.end, b.end);
  const int o3 = orient(b.start, b.end, a.start);
  const int o4 = orient(b.start, b.end, a.end);
  if (o1 != o2 && o3 != o4)
    return true;
  if (o1 == 0 && on_segment(a.start, a.end, b.start)) return true;
  if (o2 == 0 && on_segment(a.start, a.end, b.end)) return true;
  if (o3 == 0 && on_segment(b.start, b.end, a.start)) return true;
  if (o4 == 0 && on_segment(b.start, b.end, a.end)) return true;
  return false;
}

enum class Orientation { CounterClockwise, Clockwise, Degenerate };

template <typename Scalar>
struct AreaOrientation
{
  Scalar area = 0;
  Orientation orientation = Orientation::Degenerate;
};

/// Shoelace signed area of a closed vertex cycle (positive when counterclockwise).
template <typename Scalar>
inline Scalar signed_area(const std::vector<Point2<Scalar>>& vertices)
{
  const std::size_t n = vertices.size();
  if (n < 3)
    return 0;
  // Shift to the first vertex to keep the products small for projected coordinates.
  const Point2<Scalar> origin = vertices.front();
  Scalar twice = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2<Scalar> a = vertices[i] - origin;
    const Point2<Scalar> b = vertices[(i + 1) % n] - origin;
    twice += cross(a, b);
  }
  return twice / 2;
}

template <typename Scalar>
inline Scalar bounding_box_diagonal(const std::vector<Point2<Scalar>>& vertices)
{
  if (vertices.empty())
    return 0;
  Point2<Scalar> lo = vertices.front();
  Point2<Scalar> hi = vertices.front();
  for (const auto& p : vertices) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

template <typename Scalar>
inline AreaOrientation<Scalar> area_and_orientation(const std::vector<Point2<Scalar>>& vertices)
{
  const Scalar a = signed_area(vertices);
  const Scalar diag = bounding_box_diagonal(vertices);
  if (std::abs(a) <= Scalar(1e-12) * diag * diag)
    return {std::abs(a), Orientation::Degenerate};
  return {std::abs(a), a > 0 ? Orientation::CounterClockwise : Orientation::Clockwise};
}

}  // namespace polysimp
