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

#include "polysimp/simplify.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace polysimp {

namespace {

constexpr double kSpikeAngle = 1e-9;

double wrap_signed(double a)
{
  a = std::remainder(a, kTwoPi<double>);
  return a <= -kPi<double> ? a + kTwoPi<double> : a;
}

}  // namespace

void SimplifyParams::validate() const
{
  auto fail = [](const std::string& what) {
    throw GeometryError(ErrorCode::InvalidParams, what);
  };
  if (!(tau >= 0) || !std::isfinite(tau))
    fail("tau must be finite and >= 0");
  if (!(epsilon >= 0 && epsilon < kPi<double> / 2))
    fail("epsilon must lie in [0, pi/2)");
  if (!(delta >= 0 && delta < kPi<double> / 2))
    fail("delta must lie in [0, pi/2)");
  if (!gamma.dynamic && !(gamma.value >= 0))
    fail("fixed gamma must be >= 0");
  if (budget_factor == 0)
    fail("budget factor must be positive");
}

void SegmentQueue::push(double length, SegmentHandle handle)
{
  heap_.push({length, next_seq_++, handle});
}

SegmentQueue::Entry SegmentQueue::pop()
{
  Entry e = heap_.top();
  heap_.pop();
  return e;
}

SimplifyEngine::SimplifyEngine(const Ring& ring, const SimplifyParams& params)
  : params_(params), was_clockwise_(ring.was_clockwise())
{
  const auto& v = ring.vertices();
  const auto n = static_cast<std::uint32_t>(v.size());
  nodes_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i)
    nodes_.push_back({v[i], (i + n - 1) % n, (i + 1) % n});
  alive_ = n;
  report_.initial_vertices = n;
  report_.final_vertices = n;

  const double diag = bounding_box_diagonal(v);
  length_eps_ = 1e-9 * diag;
  area_eps_ = 1e-12 * diag * diag;
  budget_ = params_.budget_factor * n;

  if (n < 3) {
    vanish();
    return;
  }

  check_area_floor();
  if (vanished_)
    return;

  for (std::uint32_t i = 0; i < n; ++i) {
    if (nodes_[i].alive)
      enqueue(i);
  }
}

double SimplifyEngine::angle_at(std::uint32_t i) const
{
  return turn_interior_angle(pos(prev(i)), pos(i), pos(next(i)));
}

SegmentHandle SimplifyEngine::segment_at(std::size_t vertex_index) const
{
  if (vertex_index >= nodes_.size())
    throw std::out_of_range("segment_at: vertex index out of range");
  return handle(static_cast<std::uint32_t>(vertex_index));
}

bool SimplifyEngine::is_live(SegmentHandle h) const
{
  return !vanished_ && h.node < nodes_.size() && nodes_[h.node].alive &&
         nodes_[h.node].generation == h.generation;
}

void SimplifyEngine::require_live(SegmentHandle h) const
{
  if (!is_live(h))
    throw std::invalid_argument("stale segment handle");
}

void SimplifyEngine::enqueue(std::uint32_t i)
{
  queue_.push(length_from(i), handle(i));
}

void SimplifyEngine::unlink(std::uint32_t i)
{
  Node& node = nodes_[i];
  nodes_[node.prev].next = node.next;
  nodes_[node.next].prev = node.prev;
  node.alive = false;
  ++node.generation;
  --alive_;
}

void SimplifyEngine::vanish()
{
  vanished_ = true;
  report_.vanished = true;
  for (auto& node : nodes_) {
    if (node.alive) {
      node.alive = false;
      ++node.generation;
    }
  }
  alive_ = 0;
}

bool SimplifyEngine::would_vanish(std::size_t removed)
{
  if (alive_ >= removed + 3)
    return false;
  vanish();
  return true;
}

void SimplifyEngine::check_area_floor()
{
  if (std::abs(signed_area(vertices())) <= area_eps_)
    vanish();
}

// Removes zero-length segments and fold-back spikes reachable from `touched`.
// Nodes whose outgoing segment changed are enqueued afterwards, in the order
// they were first changed.
void SimplifyEngine::cleanup(std::vector<std::uint32_t> touched)
{
  std::deque<std::uint32_t> work(touched.begin(), touched.end());
  std::vector<std::uint32_t> changed;
  auto mark = [&changed](std::uint32_t i) {
    if (std::find(changed.begin(), changed.end(), i) == changed.end())
      changed.push_back(i);
  };

  while (!work.empty() && alive_ >= 3) {
    const std::uint32_t v = work.front();
    work.pop_front();
    if (!nodes_[v].alive)
      continue;

    const std::uint32_t w = next(v);
    if ((pos(w) - pos(v)).norm() <= length_eps_) {
      unlink(w);
      invalidate(v);
      mark(v);
      ++report_.cleanup_removals;
      work.push_front(v);
      continue;
    }
    const std::uint32_t u = prev(v);
    if ((pos(v) - pos(u)).norm() <= length_eps_) {
      unlink(v);
      invalidate(u);
      mark(u);
      ++report_.cleanup_removals;
      work.push_front(u);
      continue;
    }
    const double a = angle_at(v);
    if (a < kSpikeAngle || a > kTwoPi<double> - kSpikeAngle) {
      unlink(v);
      invalidate(u);
      mark(u);
      ++report_.cleanup_removals;
      work.push_front(w);
      work.push_front(u);
    }
  }

  if (alive_ < 3) {
    vanish();
    return;
  }
  if (alive_ == 3) {
    check_area_floor();
    if (vanished_)
      return;
  }
  for (const auto i : changed) {
    if (nodes_[i].alive)
      enqueue(i);
  }
}

SimplifyEngine::Window SimplifyEngine::capture(std::uint32_t k) const
{
  Window w;
  w.first = prev(prev(k));
  w.last = next(next(next(k)));
  std::uint32_t i = w.first;
  for (int j = 0; j < 6; ++j, i = next(i))
    w.points.push_back(pos(i));
  return w;
}

void SimplifyEngine::notify(EditKind kind, const Window& w, std::size_t removed,
                            char translate_case, const Point& q)
{
  if (!observer_)
    return;
  EditEvent event;
  event.kind = kind;
  event.before = w.points;
  event.translate_case = translate_case;
  event.join_point = q;
  event.vanished = vanished_;
  if (!vanished_) {
    std::uint32_t i = w.first;
    for (std::size_t j = 0; j + removed < w.points.size(); ++j, i = next(i))
      event.after.push_back(pos(i));
  }
  observer_(event);
}

void SimplifyEngine::remove_middle_point(SegmentHandle s_k)
{
  require_live(s_k);
  const std::uint32_t b = s_k.node;
  const Window w = capture(b);
  if (would_vanish(1)) {
    notify(EditKind::RemoveMiddlePoint, w, 1);
    return;
  }
  const std::uint32_t c = next(b);
  const std::uint32_t d = next(c);
  unlink(c);
  invalidate(b);
  notify(EditKind::RemoveMiddlePoint, w, 1);
  enqueue(b);
  cleanup({b, d});
}

bool SimplifyEngine::segment_regression(SegmentHandle s_k)
{
  require_live(s_k);
  if (alive_ < 5)
    return false;

  const std::uint32_t b = s_k.node;
  const std::uint32_t a = prev(b);
  const std::uint32_t z = prev(a);
  const std::uint32_t c = next(b);
  const std::uint32_t d = next(c);
  const std::uint32_t e = next(d);

  const Vector before_prev = pos(b) - pos(a);
  const Vector before_cur = pos(c) - pos(b);
  const Vector before_next = pos(d) - pos(c);
  const double len_prev = before_prev.norm();
  const double len_next = before_next.norm();

  const double r = len_prev / (len_prev + len_next);
  const Point p = point_along(Segment<double>{pos(b), pos(c)}, r);
  const double dir_prev = std::atan2(before_prev.y(), before_prev.x());
  const double dir_next = std::atan2(before_next.y(), before_next.x());
  const double theta = dir_prev + (1.0 - r) * wrap_signed(dir_next - dir_prev);
  const Line<double> regression{p, Vector(std::cos(theta), std::sin(theta))};

  const Vector lead = pos(a) - pos(z);
  const Vector trail = pos(e) - pos(d);
  const auto q1 = line_intersection(Line<double>{pos(a), lead}, regression);
  const auto q2 = line_intersection(Line<double>{pos(d), trail}, regression);
  if (!q1 || !q2 || !is_finite(*q1) || !is_finite(*q2))
    return false;

  const Vector new_prev = *q1 - pos(a);
  const Vector new_cur = *q2 - *q1;
  const Vector new_next = pos(d) - *q2;
  if (new_prev.dot(lead) < 0 || new_prev.dot(before_prev) < 0 || new_cur.dot(before_cur) < 0 ||
      new_next.dot(trail) < 0 || new_next.dot(before_next) < 0)
    return false;

  const Window w = capture(b);
  nodes_[b].p = *q1;
  nodes_[c].p = *q2;
  invalidate(a);
  invalidate(b);
  invalidate(c);
  notify(EditKind::SegmentRegression, w, 0);
  enqueue(a);
  enqueue(b);
  enqueue(c);
  cleanup({a, b, c, d});
  return true;
}

void SimplifyEngine::translate_segment(SegmentHandle s_k)
{
  require_live(s_k);
  const std::uint32_t b = s_k.node;
  const std::uint32_t a = prev(b);
  const std::uint32_t c = next(b);
  const std::uint32_t d = next(c);
  const Window w = capture(b);
  const double len_prev = (pos(b) - pos(a)).norm();
  const double len_next = (pos(d) - pos(c)).norm();

  if (len_prev < len_next) {
    if (would_vanish(1))
      return notify(EditKind::TranslateSegment, w, 1, 'a');
    const Point moved = pos(c) - (pos(b) - pos(a));
    unlink(b);
    nodes_[c].p = moved;
    invalidate(a);
    invalidate(c);
    notify(EditKind::TranslateSegment, w, 1, 'a');
    enqueue(a);
    enqueue(c);
    cleanup({a, c, d});
  } else if (len_prev > len_next) {
    if (would_vanish(1))
      return notify(EditKind::TranslateSegment, w, 1, 'b');
    const Vector shift = pos(d) - pos(c);
    const Point moved = params_.legacy_translate_sign ? Point(pos(b) - shift)
                                                      : Point(pos(b) + shift);
    nodes_[b].p = moved;
    unlink(c);
    invalidate(a);
    invalidate(b);
    notify(EditKind::TranslateSegment, w, 1, 'b');
    enqueue(a);
    enqueue(b);
    cleanup({a, b, d});
  } else {
    if (would_vanish(2))
      return notify(EditKind::TranslateSegment, w, 2, 'c');
    unlink(b);
    unlink(c);
    invalidate(a);
    notify(EditKind::TranslateSegment, w, 2, 'c');
    enqueue(a);
    cleanup({a, d});
  }
}

void SimplifyEngine::join_segment(SegmentHandle s_k, const Point& q)
{
  require_live(s_k);
  const std::uint32_t b = s_k.node;
  const std::uint32_t a = prev(b);
  const std::uint32_t c = next(b);
  const std::uint32_t d = next(c);
  const Window w = capture(b);
  if (would_vanish(1))
    return notify(EditKind::JoinSegment, w, 1, 0, q);
  nodes_[b].p = q;
  unlink(c);
  invalidate(a);
  invalidate(b);
  notify(EditKind::JoinSegment, w, 1, 0, q);
  enqueue(a);
  enqueue(b);
  cleanup({a, b, d});
}

bool SimplifyEngine::step()
{
  if (finished_)
    return false;
  if (vanished_ || queue_.empty() || alive_ < 3) {
    finished_ = true;
    if (!vanished_)
      check_area_floor();
    report_.final_vertices = alive_;
    return false;
  }
  if (report_.dequeues >= budget_) {
    report_.budget_exhausted = true;
    finished_ = true;
    check_area_floor();
    report_.final_vertices = alive_;
    return false;
  }

  const auto entry = queue_.pop();
  ++report_.dequeues;
  if (!is_live(entry.handle)) {
    ++report_.stale_dequeues;
    return true;
  }

  const SegmentHandle h = entry.handle;
  const std::uint32_t b = h.node;
  const std::uint32_t a = prev(b);
  const std::uint32_t c = next(b);
  const std::uint32_t d = next(c);
  const double angle_end = angle_at(c);
  const double length = length_from(b);

  if (kPi<double> - params_.delta < angle_end && angle_end < kPi<double> + params_.delta) {
    remove_middle_point(h);
    ++report_.collinear_merges;
    return true;
  }
  if (!(length <= params_.tau))
    return true;

  const double alpha = angle_difference(InteriorAngle<double>{angle_at(b)},
                                        InteriorAngle<double>{angle_end});
  // Rings under five segments skip regression and fall through to join / remove.
  if (alpha <= params_.epsilon && alive_ >= 5) {
    if (segment_regression(h))
      ++report_.regressions;
    else
      ++report_.fallback_skips;
  } else if (alpha > params_.epsilon && kPi<double> - alpha <= params_.epsilon) {
    translate_segment(h);
    ++report_.translations;
  } else {
    const auto q = line_intersection(Line<double>{pos(a), pos(b) - pos(a)},
                                     Line<double>{pos(c), pos(d) - pos(c)});
    const double gamma = params_.gamma.dynamic ? length : params_.gamma.value;
    if (q && point_segment_distance(Segment<double>{pos(b), pos(c)}, *q) <= gamma) {
      join_segment(h, *q);
      ++report_.joins;
    } else if (length_from(a) < length_from(c)) {
      remove_middle_point(handle(a));
      ++report_.remove_middle_points;
    } else {
      remove_middle_point(h);
      ++report_.remove_middle_points;
    }
  }
  return true;
}

void SimplifyEngine::run()
{
  while (step()) {
  }
}

std::vector<Point> SimplifyEngine::vertices() const
{
  std::vector<Point> out;
  if (vanished_)
    return out;
  std::uint32_t start = 0;
  while (start < nodes_.size() && !nodes_[start].alive)
    ++start;
  if (start == nodes_.size())
    return out;
  out.reserve(alive_);
  std::uint32_t i = start;
  do {
    out.push_back(pos(i));
    i = next(i);
  } while (i != start);
  return out;
}

std::optional<Ring> SimplifyEngine::ring() const
{
  if (vanished_)
    return std::nullopt;
  return Ring::from_ccw_vertices(vertices(), was_clockwise_);
}

SimplifyResult simplify(const Ring& ring, const SimplifyParams& params,
                        const EditObserver& observer)
{
  params.validate();
  SimplifyEngine engine(ring, params);
  if (observer)
    engine.set_observer(observer);
  engine.run();
  return {engine.ring(), engine.report()};
}

PolygonResult simplify_polygon(const Polygon& polygon, const SimplifyParams& params)
{
  PolygonResult result;
  auto exterior = simplify(polygon.exterior, params);
  result.exterior = exterior.report;
  if (!exterior.ring)
    return result;

  Polygon out;
  out.exterior = std::move(*exterior.ring);
  for (const auto& hole : polygon.holes) {
    auto simplified = simplify(hole, params);
    result.holes.push_back(simplified.report);
    if (simplified.ring)
      out.holes.push_back(std::move(*simplified.ring));
  }
  result.polygon = std::move(out);
  return result;
}

}  // namespace polysimp
