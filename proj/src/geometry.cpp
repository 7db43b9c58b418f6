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

#include "mapchange/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mapchange/errors.hpp"

namespace mapchange
{

namespace
{

constexpr double kMinElementArea = 1e-6;
constexpr double kMaxRasterCells = 2.0e8;

double directed_mean_nearest(std::span<const Point2> from, std::span<const Point2> to)
{
  double sum = 0.0;
  for (const auto & p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto & q : to) {
      const double dx = p.x - q.x;
      const double dy = p.y - q.y;
      best = std::min(best, dx * dx + dy * dy);
    }
    sum += std::sqrt(best);
  }
  return sum / static_cast<double>(from.size());
}

std::vector<Point2> boundary_points(const LaneSegment & seg)
{
  std::vector<Point2> pts;
  pts.reserve(seg.left_boundary.size() + seg.right_boundary.size());
  pts.insert(pts.end(), seg.left_boundary.begin(), seg.left_boundary.end());
  pts.insert(pts.end(), seg.right_boundary.begin(), seg.right_boundary.end());
  return pts;
}

double cross(const Point2 & o, const Point2 & a, const Point2 & b)
{
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(const Point2 & o, const Point2 & a, const Point2 & b)
{
  const double c = cross(o, a, b);
  return (c > 0.0) - (c < 0.0);
}

bool on_segment(const Point2 & p, const Point2 & a, const Point2 & b)
{
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point2 & p1, const Point2 & p2, const Point2 & q1, const Point2 & q2)
{
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) {
    return true;
  }
  return (o1 == 0 && on_segment(q1, p1, p2)) || (o2 == 0 && on_segment(q2, p1, p2)) ||
         (o3 == 0 && on_segment(p1, q1, q2)) || (o4 == 0 && on_segment(p2, q1, q2));
}

// Crossing abscissa of edge (a, b) with the horizontal line at y. Shared by
// the per-cell test and the scanline kernel so both classify identically.
inline double crossing_x(const Point2 & a, const Point2 & b, double y)
{
  return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

struct Grid
{
  double x0;
  double y0;
  double res;
  std::size_t nx;
  std::size_t ny;

  double cx(std::ptrdiff_t i) const { return x0 + (static_cast<double>(i) + 0.5) * res; }
  double cy(std::ptrdiff_t j) const { return y0 + (static_cast<double>(j) + 0.5) * res; }
};

Grid make_grid(const Polygon & a, const Polygon & b, double resolution)
{
  double minx = std::numeric_limits<double>::infinity();
  double miny = minx;
  double maxx = -minx;
  double maxy = -minx;
  for (const auto * poly : {&a, &b}) {
    for (const auto & p : poly->ring) {
      minx = std::min(minx, p.x);
      miny = std::min(miny, p.y);
      maxx = std::max(maxx, p.x);
      maxy = std::max(maxy, p.y);
    }
  }
  const double fx = std::max(1.0, std::ceil((maxx - minx) / resolution));
  const double fy = std::max(1.0, std::ceil((maxy - miny) / resolution));
  if (fx * fy > kMaxRasterCells) {
    throw std::invalid_argument("polygon_iou: raster grid too large for the given resolution");
  }
  return {minx, miny, resolution, static_cast<std::size_t>(fx), static_cast<std::size_t>(fy)};
}

// Half-open cell-index spans [begin, end) inside the ring on row y.
void row_spans(
  const std::vector<Point2> & ring, const Grid & g, double y, std::vector<double> & xs,
  std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> & spans)
{
  xs.clear();
  spans.clear();
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 & a = ring[i];
    const Point2 & b = ring[j];
    if ((a.y > y) != (b.y > y)) {
      xs.push_back(crossing_x(a, b, y));
    }
  }
  std::sort(xs.begin(), xs.end());
  const auto nx = static_cast<std::ptrdiff_t>(g.nx);
  // First cell index whose centre is >= x.
  const auto first_at_or_after = [&](double x) {
    auto i = static_cast<std::ptrdiff_t>(std::ceil((x - g.x0) / g.res - 0.5));
    i = std::clamp<std::ptrdiff_t>(i, 0, nx);
    while (i > 0 && g.cx(i - 1) >= x) {
      --i;
    }
    while (i < nx && g.cx(i) < x) {
      ++i;
    }
    return i;
  };
  for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
    const std::ptrdiff_t begin = first_at_or_after(xs[k]);
    const std::ptrdiff_t end = first_at_or_after(xs[k + 1]);
    if (begin < end) {
      spans.emplace_back(begin, end);
    }
  }
}

std::size_t span_cells(const std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> & spans)
{
  std::size_t n = 0;
  for (const auto & [b, e] : spans) {
    n += static_cast<std::size_t>(e - b);
  }
  return n;
}

std::size_t span_overlap(
  const std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> & a,
  const std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> & b)
{
  std::size_t n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const std::ptrdiff_t lo = std::max(a[i].first, b[j].first);
    const std::ptrdiff_t hi = std::min(a[i].second, b[j].second);
    if (lo < hi) {
      n += static_cast<std::size_t>(hi - lo);
    }
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return n;
}

RasterOverlap rasterize_scanline(const Polygon & a, const Polygon & b, const Grid & g)
{
  std::size_t in_a = 0;
  std::size_t in_b = 0;
  std::size_t in_both = 0;
  const auto ny = static_cast<std::ptrdiff_t>(g.ny);
#pragma omp parallel reduction(+ : in_a, in_b, in_both)
  {
    std::vector<double> xs;
    std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> spans_a;
    std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> spans_b;
#pragma omp for schedule(static)
    for (std::ptrdiff_t j = 0; j < ny; ++j) {
      const double y = g.cy(j);
      row_spans(a.ring, g, y, xs, spans_a);
      row_spans(b.ring, g, y, xs, spans_b);
      in_a += span_cells(spans_a);
      in_b += span_cells(spans_b);
      in_both += span_overlap(spans_a, spans_b);
    }
  }
  return {in_a, in_b, in_both};
}

RasterOverlap rasterize_per_cell(const Polygon & a, const Polygon & b, const Grid & g)
{
  RasterOverlap out;
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      const Point2 c{g.cx(static_cast<std::ptrdiff_t>(i)), g.cy(static_cast<std::ptrdiff_t>(j))};
      const bool ia = point_in_polygon(a.ring, c);
      const bool ib = point_in_polygon(b.ring, c);
      out.in_a += ia;
      out.in_b += ib;
      out.in_both += (ia && ib);
    }
  }
  return out;
}

}  // namespace

double chamfer_distance(std::span<const Point2> a, std::span<const Point2> b)
{
  if (a.empty() || b.empty()) {
    throw EmptySet();
  }
  return 0.5 * (directed_mean_nearest(a, b) + directed_mean_nearest(b, a));
}

double frechet_distance(std::span<const Point2> p, std::span<const Point2> q)
{
  if (p.empty() || q.empty()) {
    throw std::invalid_argument("frechet_distance: empty polyline");
  }
  // row[j] holds the coupling cost of (p[i], q[j]) for the current i.
  std::vector<double> row(q.size());
  row[0] = distance(p[0], q[0]);
  for (std::size_t j = 1; j < q.size(); ++j) {
    row[j] = std::max(row[j - 1], distance(p[0], q[j]));
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    double diag = row[0];
    row[0] = std::max(row[0], distance(p[i], q[0]));
    for (std::size_t j = 1; j < q.size(); ++j) {
      const double up = row[j];
      const double reach = std::min({up, diag, row[j - 1]});
      row[j] = std::max(reach, distance(p[i], q[j]));
      diag = up;
    }
  }
  return row.back();
}

double segment_distance(const LaneSegment & pred, const LaneSegment & gt)
{
  const auto pred_pts = boundary_points(pred);
  const auto gt_pts = boundary_points(gt);
  const double chamfer = chamfer_distance(pred_pts, gt_pts);
  if (gt.element_class == ElementClass::PedestrianCrossing) {
    return chamfer;
  }
  return 0.5 * (chamfer + frechet_distance(pred.centerline, gt.centerline));
}

double polygon_area(std::span<const Point2> ring)
{
  if (ring.size() < 3) {
    return 0.0;
  }
  double twice = 0.0;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    twice += ring[j].x * ring[i].y - ring[i].x * ring[j].y;
  }
  return 0.5 * std::abs(twice);
}

Polygon element_polygon(const LaneSegment & seg)
{
  Polygon poly;
  poly.ring.reserve(seg.left_boundary.size() + seg.right_boundary.size());
  poly.ring.insert(poly.ring.end(), seg.left_boundary.begin(), seg.left_boundary.end());
  poly.ring.insert(poly.ring.end(), seg.right_boundary.rbegin(), seg.right_boundary.rend());
  if (!(polygon_area(poly.ring) >= kMinElementArea)) {
    throw DegenerateElement(seg.id);
  }
  return poly;
}

bool point_in_polygon(std::span<const Point2> ring, const Point2 & p)
{
  bool inside = false;
  const std::size_t n = ring.size();
  if (n < 3) {
    return false;
  }
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 & a = ring[i];
    const Point2 & b = ring[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < crossing_x(a, b, p.y)) {
      inside = !inside;
    }
  }
  return inside;
}

bool polygons_intersect(std::span<const Point2> a, std::span<const Point2> b)
{
  if (a.empty() || b.empty()) {
    return false;
  }
  for (std::size_t i = 0, pi = a.size() - 1; i < a.size(); pi = i++) {
    for (std::size_t j = 0, pj = b.size() - 1; j < b.size(); pj = j++) {
      if (segments_intersect(a[pi], a[i], b[pj], b[j])) {
        return true;
      }
    }
  }
  return point_in_polygon(a, b.front()) || point_in_polygon(b, a.front());
}

RasterOverlap rasterize_overlap(const Polygon & a, const Polygon & b, double resolution, ExecutionPolicy policy)
{
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw std::invalid_argument("polygon_iou: resolution must be positive");
  }
  if (!(polygon_area(a.ring) >= kMinElementArea) || !(polygon_area(b.ring) >= kMinElementArea)) {
    throw DegenerateElement("polygon");
  }
  const Grid g = make_grid(a, b, resolution);
  return policy == ExecutionPolicy::Parallel ? rasterize_scanline(a, b, g) : rasterize_per_cell(a, b, g);
}

double polygon_iou(const Polygon & a, const Polygon & b, double resolution, ExecutionPolicy policy)
{
  const RasterOverlap r = rasterize_overlap(a, b, resolution, policy);
  const std::size_t u = r.union_cells();
  return u == 0 ? 0.0 : static_cast<double>(r.in_both) / static_cast<double>(u);
}

Point2 RigidTransform::apply(const Point2 & p) const
{
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y + tx, s * p.x + c * p.y + ty};
}

Polyline RigidTransform::apply(const Polyline & poly) const
{
  Polyline out;
  out.reserve(poly.size());
  for (const auto & p : poly) {
    out.push_back(apply(p));
  }
  return out;
}

LaneSegment RigidTransform::apply(const LaneSegment & seg) const
{
  LaneSegment out = seg;
  out.centerline = apply(seg.centerline);
  out.left_boundary = apply(seg.left_boundary);
  out.right_boundary = apply(seg.right_boundary);
  return out;
}

RigidTransform RigidTransform::into_frame(const Point2 & origin, double heading)
{
  RigidTransform t{-heading, 0.0, 0.0};
  const Point2 o = t.apply(origin);
  t.tx = -o.x;
  t.ty = -o.y;
  return t;
}

}  // namespace mapchange
