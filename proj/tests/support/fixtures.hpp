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

// Shared fixtures and random ring generators for the test suites.

#pragma once

#include <polysimp/geometry.hpp>
#include <polysimp/ring.hpp>

#include <algorithm>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using polysimp::Point;

inline std::vector<Point> square()
{
  return {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
}

inline std::vector<Point> notch()
{
  return {{0, 0}, {4, 0}, {4, 1}, {6, 1}, {6, 0}, {10, 0}, {10, 10}, {0, 10}};
}

inline std::vector<Point> offset()
{
  return {{0, 0}, {4, 0}, {4, 1}, {10, 1}, {10, 10}, {0, 10}};
}

inline std::vector<Point> needle()
{
  return {{0, 0}, {10, 0}, {10, 0.5}};
}

/// Three unit steps climbing from (10,0) to (4,6) on the right-hand side.
inline std::vector<Point> staircase()
{
  return {{0, 0}, {10, 0}, {10, 2}, {9, 2}, {9, 4}, {8, 4}, {8, 6}, {4, 6}, {4, 10}, {0, 10}};
}

struct Named
{
  std::string name;
  std::vector<Point> points;
};

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double halves(std::mt19937_64& rng, double lo, double hi)
{
  const auto a = static_cast<int>(lo * 2), b = static_cast<int>(hi * 2);
  return std::uniform_int_distribution<int>(a, b)(rng) / 2.0;
}

struct HistogramShape
{
  int columns_min = 4;
  int columns_max = 50;
  double width_min = 0.5;
  double width_max = 5.0;
  double step_min = 0.5;
  double step_max = 5.0;
  double base_height = 20.0;
  double band = 7.5;  ///< floor and ceiling stay within base +- band
  double flat_bottom_probability = 0.3;
};

/// Axis-aligned "histogram" ring: columns of random width whose floor and
/// ceiling move by random steps. Coordinates are multiples of 0.5, so equal
/// lengths (and queue ties) are common. Returned counter-clockwise.
inline std::vector<Point> rectilinear(std::mt19937_64& rng, const HistogramShape& shape = {})
{
  const int m = std::uniform_int_distribution<int>(shape.columns_min, shape.columns_max)(rng);
  const bool flat = std::bernoulli_distribution(shape.flat_bottom_probability)(rng);
  const double band = shape.band;

  auto walk = [&](double start) {
    std::vector<double> level{start};
    for (int j = 1; j < m; ++j) {
      double next;
      do {
        const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
        next = level.back() + sign * halves(rng, shape.step_min, shape.step_max);
      } while (next < start - band || next > start + band);
      level.push_back(next);
    }
    return level;
  };
  std::vector<double> x{0};
  for (int j = 0; j < m; ++j)
    x.push_back(x.back() + halves(rng, shape.width_min, shape.width_max));
  const std::vector<double> bottom = flat ? std::vector<double>(m, 0.0) : walk(0.0);
  const std::vector<double> top = walk(shape.base_height);

  std::vector<Point> ring{{x[0], bottom[0]}};
  for (int j = 0; j + 1 < m; ++j) {
    if (bottom[j + 1] == bottom[j])
      continue;
    ring.emplace_back(x[j + 1], bottom[j]);
    ring.emplace_back(x[j + 1], bottom[j + 1]);
  }
  ring.emplace_back(x[m], bottom[m - 1]);
  ring.emplace_back(x[m], top[m - 1]);
  for (int j = m - 1; j > 0; --j) {
    ring.emplace_back(x[j], top[j]);
    ring.emplace_back(x[j], top[j - 1]);
  }
  ring.emplace_back(x[0], top[0]);
  return ring;
}

/// Rectilinear corridor, about 100 segments, features between 0.5 and 5 units.
inline std::vector<Point> corridor()
{
  std::mt19937_64 rng(20160521);
  HistogramShape shape;
  shape.columns_min = shape.columns_max = 26;
  shape.base_height = 12.0;
  shape.band = 5.0;
  shape.flat_bottom_probability = 0.0;
  return rectilinear(rng, shape);
}

/// Star-shaped ring with random radii; no collinear or repeated vertices.
inline std::vector<Point> star(std::mt19937_64& rng, int n)
{
  std::vector<double> theta;
  for (int i = 0; i < n; ++i)
    theta.push_back(uniform(rng, 0, 2 * std::numbers::pi));
  std::sort(theta.begin(), theta.end());
  std::vector<Point> ring;
  for (const double t : theta) {
    const double r = uniform(rng, 5, 10);
    ring.emplace_back(r * std::cos(t), r * std::sin(t));
  }
  return ring;
}

inline std::vector<Point> reversed(std::vector<Point> pts)
{
  std::reverse(pts.begin(), pts.end());
  return pts;
}

/// Named corpus of 50 rings used by identity and I/O round-trip checks.
inline std::vector<Named> corpus()
{
  std::vector<Named> out{{"square", square()},     {"notch", notch()},
                         {"offset", offset()},     {"needle", needle()},
                         {"staircase", staircase()}, {"corridor", corridor()},
                         {"square-cw", reversed(square())}, {"notch-cw", reversed(notch())}};
  std::mt19937_64 rng(7);
  for (int i = 0; out.size() < 30; ++i)
    out.push_back({"rect-" + std::to_string(i), rectilinear(rng)});
  for (int i = 0; out.size() < 50; ++i)
    out.push_back({"star-" + std::to_string(i),
                   star(rng, std::uniform_int_distribution<int>(3, 60)(rng))});
  return out;
}

}  // namespace fixtures
