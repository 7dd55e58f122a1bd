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

#include "polysimp/rdp.hpp"

#include <utility>

namespace polysimp {

std::vector<Point> rdp_polyline(std::span<const Point> points, const RdpParams& params)
{
  if (points.size() < 2)
    throw GeometryError(ErrorCode::TooFewPoints, "polyline needs at least 2 points");
  if (!(params.tolerance >= 0))
    throw GeometryError(ErrorCode::InvalidParams, "RDP tolerance must be >= 0");

  std::vector<bool> keep(points.size(), false);
  keep.front() = keep.back() = true;

  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, points.size() - 1}};
  while (!stack.empty()) {
    const auto [first, last] = stack.back();
    stack.pop_back();
    if (last <= first + 1)
      continue;

    const Segment<double> chord{points[first], points[last]};
    std::size_t index = first;
    double max_dist = -1.0;
    for (std::size_t i = first + 1; i < last; ++i) {
      const double d = point_segment_distance(chord, points[i]);
      if (d > max_dist) {
        max_dist = d;
        index = i;
      }
    }
    if (max_dist >= params.tolerance) {
      keep[index] = true;
      stack.emplace_back(index, last);
      stack.emplace_back(first, index);
    }
  }

  std::vector<Point> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i])
      out.push_back(points[i]);
  }
  return out;
}

std::optional<Ring> rdp_ring(const Ring& ring, const RdpParams& params)
{
  const auto& v = ring.vertices();
  const std::size_t n = v.size();

  std::size_t far = 0;
  double far_dist = -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = (v[i] - v[0]).norm();
    if (d > far_dist) {
      far_dist = d;
      far = i;
    }
  }

  std::vector<Point> first_half(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(far) + 1);
  std::vector<Point> second_half(v.begin() + static_cast<std::ptrdiff_t>(far), v.end());
  second_half.push_back(v.front());

  std::vector<Point> out = rdp_polyline(first_half, params);
  const std::vector<Point> tail = rdp_polyline(second_half, params);
  out.insert(out.end(), tail.begin() + 1, tail.end() - 1);

  if (out.size() < 3)
    return std::nullopt;
  return Ring::from_ccw_vertices(std::move(out), ring.was_clockwise());
}

}  // namespace polysimp
