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

#include <doctest.h>

#include <polysimp/metrics.hpp>
#include <polysimp/simplify.hpp>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"

using namespace polysimp;

namespace {

Ring ring_of(const std::vector<Point>& pts)
{
  return ring_from_points(pts);
}

std::vector<Point> scaled(std::vector<Point> pts, double k, Point shift = Point::Zero())
{
  for (auto& p : pts)
    p = p * k + shift;
  return pts;
}

// Directed distance from dense samples of a's boundary to b's boundary.
double sampled_directed(const Ring& a, const Ring& b, int per_edge)
{
  double best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto s = a.segment(static_cast<std::ptrdiff_t>(i));
    for (int k = 0; k <= per_edge; ++k) {
      const Point p = s.start + (s.end - s.start) * (double(k) / per_edge);
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < b.size(); ++j)
        d = std::min(d, point_segment_distance(b.segment(static_cast<std::ptrdiff_t>(j)), p));
      best = std::max(best, d);
    }
  }
  return best;
}

double sampled_hausdorff(const Ring& a, const Ring& b, int per_edge = 1000)
{
  return std::max(sampled_directed(a, b, per_edge), sampled_directed(b, a, per_edge));
}

}  // namespace

TEST_CASE("hausdorff examples")
{
  const Ring sq = ring_of(fixtures::square());
  CHECK(hausdorff_distance(sq, sq) == 0.0);
  CHECK(hausdorff_distance(sq, ring_of(scaled(fixtures::square(), 1, {1, 0}))) ==
        doctest::Approx(1.0));
  CHECK(hausdorff_distance(ring_of(fixtures::notch()), sq) == doctest::Approx(1.0));
  CHECK(sampled_hausdorff(ring_of(fixtures::notch()), sq) == doctest::Approx(1.0));
}

TEST_CASE("hausdorff is a metric on random rings")
{
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Ring a = ring_of(fixtures::star(rng, 5 + i % 30));
    const Ring b = ring_of(fixtures::star(rng, 5 + i % 20));
    const Ring c = ring_of(scaled(fixtures::rectilinear(rng), 0.5, {-8, -5}));
    const double ab = hausdorff_distance(a, b), ba = hausdorff_distance(b, a);
    const double bc = hausdorff_distance(b, c), ac = hausdorff_distance(a, c);
    CHECK(ab == ba);
    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK(ac <= ab + bc + 1e-9);
    CHECK(ab <= ac + bc + 1e-9);
    CHECK(bc <= ab + ac + 1e-9);
  }
}

TEST_CASE("hausdorff agrees with dense sampling")
{
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    const auto raw = i % 2 ? fixtures::rectilinear(rng) : fixtures::star(rng, 6 + i % 25);
    const auto pts = scaled(raw, i % 2 ? 0.02 : 0.1);
    const Ring a = ring_of(pts);
    Ring b;
    if (i % 3 == 0) {
      b = ring_of(scaled(fixtures::star(rng, 6 + i % 15), 0.1));
    } else {
      SimplifyParams p;
      p.tau = i % 2 ? 0.06 : 0.3;
      const auto res = simplify(a, p);
      if (!res.ring)
        continue;
      b = *res.ring;
    }
    const double exact = hausdorff_distance(a, b);
    const double sampled = sampled_hausdorff(a, b);
    CAPTURE(i);
    CHECK(std::abs(exact - sampled) <= 1e-3);
    CHECK(sampled <= exact + 1e-12);
  }
}

TEST_CASE("right_angle_fraction")
{
  CHECK(right_angle_fraction(ring_of(fixtures::square())) == 1.0);
  CHECK(right_angle_fraction(ring_of(fixtures::notch())) == 1.0);
  CHECK(right_angle_fraction(ring_of({{0, 0}, {10, 0}, {0, 10}})) == doctest::Approx(1.0 / 3));
  CHECK(right_angle_fraction(ring_of({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {-0.5, 5}})) ==
        doctest::Approx(2.0 / 5));
  // 4 degrees off square still counts, 6 does not
  const double t4 = std::tan(4 * kPi<double> / 180), t6 = std::tan(6 * kPi<double> / 180);
  CHECK(right_angle_fraction(ring_of({{0, 0}, {10, 0}, {10 + 10 * t4, 10}, {0, 10}})) == 1.0);
  CHECK(right_angle_fraction(ring_of({{0, 0}, {10, 0}, {10 + 10 * t6, 10}, {0, 10}})) == 0.5);
  CHECK(right_angle_fraction(ring_of({{0, 0}, {10, 0}, {10 + 10 * t4, 10}, {0, 10}}), 0) == 0.5);
}

TEST_CASE("quality_report")
{
  SUBCASE("identity")
  {
    const Ring sq = ring_of(fixtures::square());
    const auto q = quality_report(sq, sq);
    CHECK(q.hausdorff == 0.0);
    CHECK(q.segment_count_before == 4);
    CHECK(q.segment_count_after == 4);
    CHECK_FALSE(q.vanished);
  }
  SUBCASE("notch to rectangle")
  {
    const auto q = quality_report(ring_of(fixtures::notch()), ring_of(fixtures::square()));
    CHECK(q.segment_count_before == 8);
    CHECK(q.segment_count_after == 4);
    CHECK(q.area_before == 98.0);
    CHECK(q.area_after == 100.0);
    CHECK(q.hausdorff == doctest::Approx(1.0));
  }
  SUBCASE("vanished")
  {
    const auto q = quality_report(ring_of(fixtures::square()), std::nullopt);
    CHECK(q.vanished);
    CHECK(q.segment_count_after == 0);
    CHECK(q.area_after == 0.0);
    CHECK(q.right_angle_fraction_after == 0.0);
    CHECK(q.hausdorff == doctest::Approx(std::sqrt(50.0)));
  }
  CHECK((centroid(ring_of(fixtures::square())) - Point(5, 5)).norm() < 1e-12);
}
