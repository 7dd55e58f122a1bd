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

// Textbook recursive RDP used as the reference for the iterative implementation.

#pragma once

#include <polysimp/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "support/fixtures.hpp"

namespace rdp_reference {

using polysimp::Point;


// Textbook recursive formulation, with its own distance helper.
inline double naive_dist(const Point& p, const Point& a, const Point& b)
{
  const double dx = b.x() - a.x(), dy = b.y() - a.y();
  const double l2 = dx * dx + dy * dy;
  if (l2 == 0)
    return std::hypot(p.x() - a.x(), p.y() - a.y());
  const double t = std::clamp(((p.x() - a.x()) * dx + (p.y() - a.y()) * dy) / l2, 0.0, 1.0);
  return std::hypot(p.x() - (a.x() + t * dx), p.y() - (a.y() + t * dy));
}

inline void naive_rec(const std::vector<Point>& pts, std::size_t i, std::size_t j, double tol,
               std::vector<bool>& keep)
{
  if (j <= i + 1)
    return;
  double dmax = -1;
  std::size_t k = i;
  for (std::size_t m = i + 1; m < j; ++m) {
    const double d = naive_dist(pts[m], pts[i], pts[j]);
    if (d > dmax) {
      dmax = d;
      k = m;
    }
  }
  if (dmax >= tol) {
    keep[k] = true;
    naive_rec(pts, i, k, tol, keep);
    naive_rec(pts, k, j, tol, keep);
  }
}

inline std::vector<Point> naive_rdp(const std::vector<Point>& pts, double tol)
{
  std::vector<bool> keep(pts.size(), false);
  keep.front() = keep.back() = true;
  naive_rec(pts, 0, pts.size() - 1, tol, keep);
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (keep[i])
      out.push_back(pts[i]);
  return out;
}

inline std::vector<Point> random_polyline(std::mt19937_64& rng, int i)
{
  const int n = std::uniform_int_distribution<int>(2, 50)(rng);
  std::vector<Point> pts;
  double x = 0;
  for (int k = 0; k < n; ++k) {
    if (i % 2) {
      // coarse grid: many equal distances and collinear runs
      pts.emplace_back(fixtures::halves(rng, 0, 5) + k, fixtures::halves(rng, 0, 3));
    } else {
      x += fixtures::uniform(rng, 0, 2);
      pts.emplace_back(x, fixtures::uniform(rng, -2, 2));
    }
  }
  return pts;
}

}  // namespace rdp_reference
