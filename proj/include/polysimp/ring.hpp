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

#include <cstddef>
#include <span>
#include <vector>

#include "polysimp/geometry.hpp"

namespace polysimp {

/// Closed polygon boundary, stored counterclockwise with circular indexing.
///
/// Rings built from clockwise input are reversed on construction and remember
/// it, so `restored()` can hand back the caller's orientation.
class Ring
{
public:
  Ring() = default;

  /// Merges consecutive duplicates, drops a repeated closing point, and
  /// normalizes to counterclockwise order.
  static Ring from_points(std::span<const Point> points);

  /// Takes an already-counterclockwise cycle verbatim (engine output).
  static Ring from_ccw_vertices(std::vector<Point> vertices, bool was_clockwise);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  const Point& operator[](std::ptrdiff_t i) const;
  const Point& vertex(std::ptrdiff_t i) const { return (*this)[i]; }

  /// s_i = (p_i, p_{i+1}).
  Segment<double> segment(std::ptrdiff_t i) const { return {vertex(i), vertex(i + 1)}; }

  const std::vector<Point>& vertices() const { return vertices_; }
  bool was_clockwise() const { return was_clockwise_; }

  /// Vertices in the orientation the ring was created with.
  std::vector<Point> restored() const;

private:
  std::vector<Point> vertices_;
  bool was_clockwise_ = false;
};

Ring ring_from_points(std::span<const Point> points);

/// Interior angle at vertex p_{i+1}, between s_i and s_{i+1}.
/// Throws `SpikeAngle` when the boundary folds back on itself there.
InteriorAngle<double> interior_angle(const Ring& ring, std::ptrdiff_t i);

AreaOrientation<double> ring_area_and_orientation(const Ring& ring);

/// True when `a` and `b` hold the same vertex cycle up to rotation, with
/// coordinates equal within `tolerance`.
bool same_cycle(const std::vector<Point>& a, const std::vector<Point>& b, double tolerance = 0.0);

}  // namespace polysimp
