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

#include "polysimp/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace polysimp {

namespace {

struct Interval
{
  std::size_t source;
  double t0;
  double t1;
  std::vector<double> d0;  // distance to every target segment at t0
  std::vector<double> d1;
  double upper;
};

struct ByUpper
{
  bool operator()(const Interval& a, const Interval& b) const { return a.upper < b.upper; }
};

std::vector<Segment<double>> segments_of(const Ring& ring)
{
  std::vector<Segment<double>> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i)
    out.push_back(ring.segment(static_cast<std::ptrdiff_t>(i)));
  return out;
}

std::vector<double> distances(const std::vector<Segment<double>>& targets, const Point& q)
{
  std::vector<double> out(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j)
    out[j] = point_segment_distance(targets[j], q);
  return out;
}

double min_of(const std::vector<double>& d)
{
  return *std::min_element(d.begin(), d.end());
}

// min over targets of the larger endpoint distance; each target's distance is
// convex along the interval, so this bounds the lower envelope from above.
double upper_bound(const std::vector<double>& d0, const std::vector<double>& d1)
{
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < d0.size(); ++j)
    best = std::min(best, std::max(d0[j], d1[j]));
  return best;
}

double directed_hausdorff(const std::vector<Segment<double>>& sources,
                          const std::vector<Segment<double>>& targets, double tolerance)
{
  double lower = 0.0;
  std::priority_queue<Interval, std::vector<Interval>, ByUpper> heap;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    auto d0 = distances(targets, sources[i].start);
    auto d1 = distances(targets, sources[i].end);
    lower = std::max({lower, min_of(d0), min_of(d1)});
    const double upper = upper_bound(d0, d1);
    heap.push({i, 0.0, 1.0, std::move(d0), std::move(d1), upper});
  }

  while (!heap.empty()) {
    Interval top = heap.top();
    heap.pop();
    if (top.upper <= lower + tolerance)
      break;

    const double mid = 0.5 * (top.t0 + top.t1);
    if (mid <= top.t0 || mid >= top.t1)
      continue;  // interval exhausted at double resolution
    const auto& s = sources[top.source];
    auto dm = distances(targets, s.start + mid * (s.end - s.start));
    lower = std::max(lower, min_of(dm));

    Interval left{top.source, top.t0, mid, std::move(top.d0), dm, 0.0};
    left.upper = upper_bound(left.d0, left.d1);
    Interval right{top.source, mid, top.t1, std::move(dm), std::move(top.d1), 0.0};
    right.upper = upper_bound(right.d0, right.d1);
    if (left.upper > lower + tolerance)
      heap.push(std::move(left));
    if (right.upper > lower + tolerance)
      heap.push(std::move(right));
  }
  return lower;
}

}  // namespace

double hausdorff_distance(const Ring& a, const Ring& b)
{
  const auto sa = segments_of(a);
  const auto sb = segments_of(b);
  std::vector<Point> all = a.vertices();
  all.insert(all.end(), b.vertices().begin(), b.vertices().end());
  double scale = 1.0;
  for (const auto& p : all)
    scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
  const double tolerance = 1e-12 * scale;
  return std::max(directed_hausdorff(sa, sb, tolerance), directed_hausdorff(sb, sa, tolerance));
}

double right_angle_fraction(const Ring& ring, double window)
{
  if (ring.empty())
    return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    const double a = turn_interior_angle(ring[k - 1], ring[k], ring[k + 1]);
    if (std::abs(a - kPi<double> / 2) <= window || std::abs(a - 3 * kPi<double> / 2) <= window)
      ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ring.size());
}

Point centroid(const Ring& ring)
{
  const auto& v = ring.vertices();
  const Point origin = v.front();
  double twice_area = 0.0;
  Point acc = Point::Zero();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point p = v[i] - origin;
    const Point q = v[(i + 1) % v.size()] - origin;
    const double c = cross(p, q);
    twice_area += c;
    acc += c * (p + q);
  }
  if (std::abs(twice_area) <= 1e-12 * std::pow(bounding_box_diagonal(v), 2)) {
    Point mean = Point::Zero();
    for (const auto& p : v)
      mean += p;
    return mean / static_cast<double>(v.size());
  }
  return origin + acc / (3.0 * twice_area);
}

QualityReport quality_report(const Ring& before, const std::optional<Ring>& after)
{
  QualityReport r;
  r.segment_count_before = before.size();
  r.area_before = ring_area_and_orientation(before).area;
  r.right_angle_fraction_before = right_angle_fraction(before);
  if (!after) {
    r.vanished = true;
    const Point c = centroid(before);
    for (const auto& p : before.vertices())
      r.hausdorff = std::max(r.hausdorff, (p - c).norm());
    return r;
  }
  r.segment_count_after = after->size();
  r.area_after = ring_area_and_orientation(*after).area;
  r.right_angle_fraction_after = right_angle_fraction(*after);
  r.hausdorff = hausdorff_distance(before, *after);
  return r;
}

}  // namespace polysimp
