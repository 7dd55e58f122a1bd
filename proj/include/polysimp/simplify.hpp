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
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "polysimp/geometry.hpp"
#include "polysimp/ring.hpp"

namespace polysimp {

/// Joining distance threshold: a fixed distance, or the length of the
/// segment under consideration at decision time.
struct GammaPolicy
{
  bool dynamic = true;
  double value = 0.0;

  static GammaPolicy fixed(double v) { return {false, v}; }
  static GammaPolicy current_length() { return {true, 0.0}; }
};

struct SimplifyParams
{
  double tau = 0.0;                          ///< distance threshold (map units)
  double epsilon = kPi<double> / 36.0;       ///< angle threshold
  double delta = kPi<double> / 180.0;        ///< collinearity threshold
  GammaPolicy gamma = GammaPolicy::current_length();

  /// Use `p_k - vec(s_{k+1})` in the longer-predecessor translate case instead
  /// of the rigid `p_k + vec(s_{k+1})`.
  bool legacy_translate_sign = false;

  /// Dequeue budget per initial segment.
  std::size_t budget_factor = 16;

  /// Throws `GeometryError(InvalidParams)` when a threshold is out of range.
  void validate() const;
};

/// Reference to the segment leaving a ring node. Stale once the node's
/// generation moves on.
struct SegmentHandle
{
  std::uint32_t node = 0;
  std::uint32_t generation = 0;

  friend bool operator==(const SegmentHandle&, const SegmentHandle&) = default;
};

/// Min-queue of segments by length, FIFO among equal lengths, with lazy
/// deletion of stale entries.
class SegmentQueue
{
public:
  struct Entry
  {
    double length;
    std::uint64_t seq;
    SegmentHandle handle;
  };

  void push(double length, SegmentHandle handle);
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  /// Removes and returns the smallest entry, live or not.
  Entry pop();

private:
  struct Later
  {
    bool operator()(const Entry& a, const Entry& b) const
    {
      if (a.length != b.length)
        return a.length > b.length;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  std::uint64_t next_seq_ = 0;
};

struct SimplifyReport
{
  std::size_t collinear_merges = 0;
  std::size_t regressions = 0;
  std::size_t translations = 0;
  std::size_t joins = 0;
  std::size_t remove_middle_points = 0;
  std::size_t fallback_skips = 0;
  std::size_t stale_dequeues = 0;
  std::size_t dequeues = 0;
  std::size_t cleanup_removals = 0;
  bool budget_exhausted = false;
  bool vanished = false;
  std::size_t initial_vertices = 0;
  std::size_t final_vertices = 0;
};

enum class EditKind { RemoveMiddlePoint, SegmentRegression, TranslateSegment, JoinSegment };

/// Snapshot of one edit, taken before degenerate cleanup.
///
/// `before` holds p_{k-2} .. p_{k+3} around the edited segment s_k = (p_k, p_{k+1}).
/// `after` holds the same stretch after the edit, deleted vertices omitted.
struct EditEvent
{
  EditKind kind;
  std::vector<Point> before;
  std::vector<Point> after;
  /// TranslateSegment: 'a' (shorter predecessor), 'b' (shorter successor), 'c' (equal).
  char translate_case = 0;
  /// JoinSegment: the neighbors' line intersection.
  Point join_point = Point::Zero();
  bool vanished = false;
};

using EditObserver = std::function<void(const EditEvent&)>;

/// Queue-driven simplifier over a circular doubly-linked copy of one ring.
///
/// The four edit operations are public and act on a segment handle; `run()`
/// drives them from the length queue.
class SimplifyEngine
{
public:
  SimplifyEngine(const Ring& ring, const SimplifyParams& params);

  /// Handle of s_i in the ring the engine was built from.
  SegmentHandle segment_at(std::size_t vertex_index) const;
  bool is_live(SegmentHandle h) const;

  void remove_middle_point(SegmentHandle s_k);
  /// Returns false (and leaves the ring untouched) on fallback.
  bool segment_regression(SegmentHandle s_k);
  void translate_segment(SegmentHandle s_k);
  void join_segment(SegmentHandle s_k, const Point& q);

  /// One dequeue. Returns false once the loop is finished.
  bool step();
  void run();

  void set_observer(EditObserver observer) { observer_ = std::move(observer); }

  bool vanished() const { return vanished_; }
  std::size_t segment_count() const { return alive_; }

  /// Current vertices starting at the lowest surviving node.
  std::vector<Point> vertices() const;
  /// Current ring, carrying the orientation flag of the input.
  std::optional<Ring> ring() const;
  const SimplifyReport& report() const { return report_; }

private:
  struct Node
  {
    Point p;
    std::uint32_t prev;
    std::uint32_t next;
    std::uint32_t generation = 0;
    bool alive = true;
  };

  std::uint32_t prev(std::uint32_t i) const { return nodes_[i].prev; }
  std::uint32_t next(std::uint32_t i) const { return nodes_[i].next; }
  const Point& pos(std::uint32_t i) const { return nodes_[i].p; }
  double length_from(std::uint32_t i) const { return (pos(next(i)) - pos(i)).norm(); }
  double angle_at(std::uint32_t i) const;

  SegmentHandle handle(std::uint32_t i) const { return {i, nodes_[i].generation}; }
  void require_live(SegmentHandle h) const;
  void invalidate(std::uint32_t i) { ++nodes_[i].generation; }
  void enqueue(std::uint32_t i);
  void unlink(std::uint32_t i);
  void vanish();
  bool would_vanish(std::size_t removed);
  void cleanup(std::vector<std::uint32_t> touched);
  void check_area_floor();

  struct Window
  {
    std::uint32_t first = 0;
    std::uint32_t last = 0;
    std::vector<Point> points;
  };
  Window capture(std::uint32_t k) const;
  void notify(EditKind kind, const Window& w, std::size_t removed, char translate_case = 0,
              const Point& q = Point::Zero());

  SimplifyParams params_;
  std::vector<Node> nodes_;
  SegmentQueue queue_;
  std::size_t alive_ = 0;
  bool vanished_ = false;
  bool was_clockwise_ = false;
  bool finished_ = false;
  double length_eps_ = 0.0;
  double area_eps_ = 0.0;
  std::size_t budget_ = 0;
  SimplifyReport report_;
  EditObserver observer_;
};

struct SimplifyResult
{
  std::optional<Ring> ring;  ///< nullopt when the ring vanished
  SimplifyReport report;
};

SimplifyResult simplify(const Ring& ring, const SimplifyParams& params,
                        const EditObserver& observer = {});

struct Polygon
{
  Ring exterior;
  std::vector<Ring> holes;
};

struct PolygonResult
{
  std::optional<Polygon> polygon;  ///< nullopt when the exterior vanished
  SimplifyReport exterior;
  std::vector<SimplifyReport> holes;
};

PolygonResult simplify_polygon(const Polygon& polygon, const SimplifyParams& params);

}  // namespace polysimp
