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

#include <polysimp/errors.hpp>
#include <polysimp/geometry.hpp>
#include <polysimp/ring.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "support/fixtures.hpp"

using namespace polysimp;

namespace {

constexpr double pi = kPi<double>;

template <typename F>
ErrorCode code_of(F&& f)
{
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  FAIL("no GeometryError thrown");
  return ErrorCode::InvalidParams;
}

}  // namespace

TEST_CASE("ring_from_points")
{
  SUBCASE("square")
  {
    const Ring r = ring_from_points(fixtures::square());
    CHECK(r.size() == 4);
    CHECK_FALSE(r.was_clockwise());
    const auto ao = ring_area_and_orientation(r);
    CHECK(ao.area == 100.0);
    CHECK(ao.orientation == Orientation::CounterClockwise);
  }
  SUBCASE("clockwise input is reversed")
  {
    const Ring r = ring_from_points(std::vector<Point>{{0, 0}, {0, 10}, {10, 10}, {10, 0}});
    CHECK(r.was_clockwise());
    CHECK(same_cycle(r.vertices(), fixtures::square()));
    CHECK(r.restored() == std::vector<Point>{{0, 0}, {0, 10}, {10, 10}, {10, 0}});
  }
  SUBCASE("duplicates and closing point are dropped")
  {
    const Ring r = ring_from_points(
        std::vector<Point>{{0, 0}, {10, 0}, {10, 0}, {10, 10}, {0, 10}, {0, 0}});
    CHECK(r.vertices() == fixtures::square());
  }
  SUBCASE("errors")
  {
    CHECK(code_of([] { ring_from_points(std::vector<Point>{{0, 0}, {1, 1}, {0, 0}}); }) ==
          ErrorCode::DegenerateRing);
    CHECK(code_of([] {
            ring_from_points(std::vector<Point>{
                {0, 0}, {1, std::numeric_limits<double>::infinity()}, {0, 1}});
          }) == ErrorCode::InvalidCoordinate);
    CHECK(code_of([] {
            ring_from_points(std::vector<Point>{{0, 0}, {std::nan(""), 0}, {0, 1}});
          }) == ErrorCode::InvalidCoordinate);
  }
  SUBCASE("circular indexing")
  {
    const Ring r = ring_from_points(fixtures::square());
    CHECK(r[4] == r[0]);
    CHECK(r[-1] == r[3]);
    CHECK(r.segment(3).end == Point(0, 0));
  }
}

TEST_CASE("interior_angle")
{
  const Ring sq = ring_from_points(fixtures::square());
  for (int i = 0; i < 4; ++i)
    CHECK(interior_angle(sq, i).radians == doctest::Approx(pi / 2));
  const Ring line = ring_from_points(std::vector<Point>{{0, 0}, {5, 0}, {10, 0}, {10, 10}, {0, 10}});
  CHECK(interior_angle(line, 0).radians == doctest::Approx(pi));
  const Ring notch = ring_from_points(fixtures::notch());
  const auto reflex = interior_angle(notch, 1);  // at (4,1)
  CHECK(reflex.radians == doctest::Approx(3 * pi / 2));
  CHECK(reflex.is_reflex());
  CHECK_FALSE(reflex.is_convex());
  const Ring spike = ring_from_points(std::vector<Point>{{0, 0}, {0, 1}, {10, 1}, {10, 10}, {0, 10}});
  CHECK(code_of([&] { interior_angle(spike, 4); }) == ErrorCode::SpikeAngle);
}

TEST_CASE("angle_difference")
{
  using A = InteriorAngle<double>;
  CHECK(angle_difference(A{pi / 2}, A{3 * pi / 2}) == doctest::Approx(pi));
  CHECK(angle_difference(A{3 * pi / 2}, A{3 * pi / 2}) == 0.0);
  CHECK(angle_difference(A{0.1}, A{2 * pi - 0.1}) == doctest::Approx(0.2));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    const A a{fixtures::uniform(rng, 0, 2 * pi)}, b{fixtures::uniform(rng, 0, 2 * pi)};
    CHECK(angle_difference(a, b) == angle_difference(b, a));
    CHECK(angle_difference(a, b) <= pi);
    CHECK(angle_difference(a, b) >= 0);
  }
}

TEST_CASE("direction_angle")
{
  CHECK(direction_angle(Segment<double>{{0, 0}, {1, 0}}).radians == 0.0);
  CHECK(direction_angle(Segment<double>{{0, 0}, {0, 5}}).radians == doctest::Approx(pi / 2));
  CHECK(direction_angle(Segment<double>{{1, 1}, {0, 0}}).radians == doctest::Approx(5 * pi / 4));
  CHECK(code_of([] { direction_angle(Segment<double>{{1, 1}, {1, 1}}); }) ==
        ErrorCode::DegenerateSegment);
}

TEST_CASE("point_along")
{
  const Segment<double> s{{0, 0}, {10, 0}};
  CHECK(point_along(s, 0.0) == Point(0, 0));
  CHECK(point_along(s, 1.0) == Point(10, 0));
  CHECK(point_along(s, 0.25) == Point(2.5, 0));
  CHECK(code_of([&] { point_along(s, 1.5); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { point_along(s, -0.1); }) == ErrorCode::ParameterOutOfRange);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const Segment<double> t{{fixtures::uniform(rng, -1e4, 1e4), fixtures::uniform(rng, -1e4, 1e4)},
                            {fixtures::uniform(rng, -1e4, 1e4), fixtures::uniform(rng, -1e4, 1e4)}};
    const Point p = point_along(t, fixtures::uniform(rng, 0, 1));
    CHECK(point_segment_distance(t, p) <= 1e-12 * t.length());
  }
}

TEST_CASE("line_intersection")
{
  const auto q = line_intersection(Line<double>{{6, 5}, {0, 1}}, Line<double>{{0, 0}, {1, 0}});
  REQUIRE(q);
  CHECK(*q == Point(6, 0));
  CHECK_FALSE(line_intersection(Line<double>{{0, 0}, {1, 0}}, Line<double>{{0, 1}, {1, 0}}));
  const auto d = line_intersection(Line<double>{{0, 0}, {1, 1}}, Line<double>{{4, -3}, {0, 1}});
  REQUIRE(d);
  CHECK((*d - Point(4, 4)).norm() < 1e-12);

  std::mt19937_64 rng(3);
  auto rnd = [&] { return Point(fixtures::uniform(rng, -1e4, 1e4), fixtures::uniform(rng, -1e4, 1e4)); };
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const Line<double> a{rnd(), rnd()}, b{rnd(), rnd()};
    const auto x = line_intersection(a, b);
    if (!x || x->cwiseAbs().maxCoeff() > 1e4)
      continue;
    ++hits;
    const double da = std::abs(cross(a.direction, *x - a.point)) / a.direction.norm();
    const double db = std::abs(cross(b.direction, *x - b.point)) / b.direction.norm();
    CHECK(da <= 1e-9);
    CHECK(db <= 1e-9);
  }
  CHECK(hits > 1000);
}

TEST_CASE("point_segment_distance")
{
  CHECK(point_segment_distance(Segment<double>{{6, 0}, {6, 1}}, Point(6, 0)) == 0.0);
  CHECK(point_segment_distance(Segment<double>{{0, 0}, {6, 0}}, Point(3, 4)) == 4.0);
  CHECK(point_segment_distance(Segment<double>{{0, 0}, {6, 0}}, Point(10, 3)) == 5.0);
}

TEST_CASE("ring_area_and_orientation")
{
  const auto ccw = area_and_orientation(fixtures::square());
  CHECK(ccw.area == 100.0);
  CHECK(ccw.orientation == Orientation::CounterClockwise);
  const auto cw = area_and_orientation(fixtures::reversed(fixtures::square()));
  CHECK(cw.area == 100.0);
  CHECK(cw.orientation == Orientation::Clockwise);
  const auto flat = area_and_orientation(std::vector<Point>{{0, 0}, {5, 0}, {10, 0}});
  CHECK(flat.area == 0.0);
  CHECK(flat.orientation == Orientation::Degenerate);
}

TEST_CASE("exterior turn sums to a full turn")
{
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto pts = i % 2 ? fixtures::rectilinear(rng) : fixtures::star(rng, 3 + i % 80);
    const Ring r = ring_from_points(pts);
    double sum = 0;
    for (std::size_t k = 0; k < r.size(); ++k)
      sum += pi - interior_angle(r, static_cast<std::ptrdiff_t>(k)).radians;
    CHECK(std::abs(sum - 2 * pi) <= 1e-6);
  }
}

TEST_CASE("ring_from_points is idempotent")
{
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    auto pts = i % 2 ? fixtures::rectilinear(rng) : fixtures::star(rng, 3 + i % 80);
    if (i % 3 == 0)
      pts = fixtures::reversed(pts);
    if (i % 5 == 0)
      pts.push_back(pts.front());
    const Ring once = ring_from_points(pts);
    const Ring twice = ring_from_points(once.vertices());
    CHECK(same_cycle(once.vertices(), twice.vertices()));
  }
}

TEST_CASE("same_cycle")
{
  CHECK(same_cycle({{0, 0}, {1, 0}, {0, 1}}, {{1, 0}, {0, 1}, {0, 0}}));
  CHECK_FALSE(same_cycle({{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {0, 1}, {1, 0}}));
  CHECK_FALSE(same_cycle({{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}}));
  CHECK(same_cycle({{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 1e-10}, {0, 1}}, 1e-9));
}
