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

#include "polysimp/ring.hpp"

#include <algorithm>

namespace polysimp {

Ring Ring::from_points(std::span<const Point> points)
{
  for (const auto& p : points) {
    if (!is_finite(p))
      throw GeometryError(ErrorCode::InvalidCoordinate, "non-finite coordinate in ring");
  }

  const std::vector<Point> raw(points.begin(), points.end());
  const double eps = 1e-9 * bounding_box_diagonal(raw);

  std::vector<Point> merged;
  merged.reserve(raw.size());
  for (const auto& p : raw) {
    if (merged.empty() || (p - merged.back()).norm() > eps)
      merged.push_back(p);
  }
  while (merged.size() > 1 && (merged.front() - merged.back()).norm() <= eps)
    merged.pop_back();

  if (merged.size() < 3)
    throw GeometryError(ErrorCode::DegenerateRing,
                        "ring needs at least 3 distinct vertices, got " +
                          std::to_string(merged.size()));

  Ring ring;
  if (signed_area(merged) < 0) {
    std::reverse(merged.begin(), merged.end());
    ring.was_clockwise_ = true;
  }
  ring.vertices_ = std::move(merged);
  return ring;
}

Ring Ring::from_ccw_vertices(std::vector<Point> vertices, bool was_clockwise)
{
  Ring ring;
  ring.vertices_ = std::move(vertices);
  ring.was_clockwise_ = was_clockwise;
  return ring;
}

const Point& Ring::operator[](std::ptrdiff_t i) const
{
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::vector<Point> Ring::restored() const
{
  std::vector<Point> out = vertices_;
  if (was_clockwise_)
    std::reverse(out.begin(), out.end());
  return out;
}

Ring ring_from_points(std::span<const Point> points)
{
  return Ring::from_points(points);
}

InteriorAngle<double> interior_angle(const Ring& ring, std::ptrdiff_t i)
{
  const double a = turn_interior_angle(ring[i], ring[i + 1], ring[i + 2]);
  if (a < 1e-9 || a > kTwoPi<double> - 1e-9)
    throw GeometryError(ErrorCode::SpikeAngle,
                        "spike at vertex " + std::to_string(i + 1) + " (angle " +
                          std::to_string(a) + ")");
  return {a};
}

AreaOrientation<double> ring_area_and_orientation(const Ring& ring)
{
  return area_and_orientation(ring.vertices());
}

bool same_cycle(const std::vector<Point>& a, const std::vector<Point>& b, double tolerance)
{
  if (a.size() != b.size())
    return false;
  if (a.empty())
    return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      match = (a[i] - b[(i + shift) % n]).lpNorm<Eigen::Infinity>() <= tolerance;
    if (match)
      return true;
  }
  return false;
}

}  // namespace polysimp
