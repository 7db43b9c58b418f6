// Copyright 2026 The mapchange Authors
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

#ifndef MAPCHANGE__GEOMETRY_HPP_
#define MAPCHANGE__GEOMETRY_HPP_

#include <cmath>
#include <span>
#include <vector>

#include "mapchange/parallel.hpp"
#include "mapchange/types.hpp"

namespace mapchange
{

/// Closed ring, implicitly closed (first point is not repeated).
struct Polygon
{
  std::vector<Point2> ring;
};

inline double distance(const Point2 & a, const Point2 & b)
{
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Symmetric Chamfer distance: half the sum of the two directed mean
/// nearest-neighbour distances. Throws EmptySet if either set is empty.
double chamfer_distance(std::span<const Point2> a, std::span<const Point2> b);

/// Discrete Fréchet distance over the coupling lattice (O(n*m) time,
/// O(m) memory). Throws std::invalid_argument if either polyline is empty.
double frechet_distance(std::span<const Point2> p, std::span<const Point2> q);

/// Element distance used for matching. Lane ground truth:
///   0.5 * (chamfer(pred boundaries, gt boundaries) + frechet(centerlines)).
/// Crossing ground truth: chamfer over the boundary point sets only.
double segment_distance(const LaneSegment & pred, const LaneSegment & gt);

/// Shoelace area (absolute value).
double polygon_area(std::span<const Point2> ring);

/// Left boundary followed by the reversed right boundary. Throws
/// DegenerateElement if the area is below 1e-6 m^2.
Polygon element_polygon(const LaneSegment & seg);

/// True if the two rings overlap or touch (edge crossing or containment).
bool polygons_intersect(std::span<const Point2> a, std::span<const Point2> b);

/// Even-odd point-in-polygon test on the ring.
bool point_in_polygon(std::span<const Point2> ring, const Point2 & p);

/// Cell counts produced by rasterizing two polygons on a shared grid.
struct RasterOverlap
{
  std::size_t in_a{0};
  std::size_t in_b{0};
  std::size_t in_both{0};

  std::size_t union_cells() const { return in_a + in_b - in_both; }
};

/// Rasterizes both polygons on the grid of cell size `resolution` anchored at
/// the lower corner of their joint bounding box. A cell belongs to a polygon
/// when its center is inside under the even-odd rule.
///
/// The parallel path scan-converts each grid row (OpenMP over rows); the
/// serial path tests every cell center individually. They agree exactly.
RasterOverlap rasterize_overlap(
  const Polygon & a, const Polygon & b, double resolution,
  ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Rasterized IoU in [0, 1]. Throws DegenerateElement for zero-area input
/// and std::invalid_argument for a non-positive resolution.
double polygon_iou(
  const Polygon & a, const Polygon & b, double resolution,
  ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Rigid motion helper: rotate by `angle` (radians) about the origin, then
/// translate by (tx, ty).
struct RigidTransform
{
  double angle{0.0};
  double tx{0.0};
  double ty{0.0};

  Point2 apply(const Point2 & p) const;
  Polyline apply(const Polyline & poly) const;
  LaneSegment apply(const LaneSegment & seg) const;
  /// Transform that maps world coordinates into a frame whose origin is
  /// `origin` and whose x axis points along `heading`.
  static RigidTransform into_frame(const Point2 & origin, double heading);
};

}  // namespace mapchange

#endif  // MAPCHANGE__GEOMETRY_HPP_
