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

#include <optional>
#include <span>
#include <vector>

#include "polysimp/ring.hpp"

namespace polysimp {

struct RdpParams
{
  double tolerance = 0.0;  ///< perpendicular distance, map units
};

/// Ramer-Douglas-Peucker. Endpoints are always kept; an interior point is
/// dropped when every split that could retain it sees a maximum deviation
/// strictly below the tolerance. The result is a subsequence of `points`.
std::vector<Point> rdp_polyline(std::span<const Point> points, const RdpParams& params);

/// Closed-ring variant: splits at vertex 0 and the vertex farthest from it,
/// simplifies both halves, and rejoins. nullopt when fewer than 3 vertices remain.
std::optional<Ring> rdp_ring(const Ring& ring, const RdpParams& params);

}  // namespace polysimp
