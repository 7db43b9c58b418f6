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

#include "mapchange/map_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "mapchange/errors.hpp"
#include "mapchange/geometry.hpp"
#include "mapchange/json_io.hpp"

namespace mapchange
{

namespace
{

std::vector<Point2> fov_ring(const Fov & f)
{
  return {{f.xmin, f.ymin}, {f.xmax, f.ymin}, {f.xmax, f.ymax}, {f.xmin, f.ymax}};
}

bool all_finite(const Polyline & poly)
{
  return std::all_of(poly.begin(), poly.end(), [](const Point2 & p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
  });
}

bool polyline_touches(const Polyline & poly, const std::vector<Point2> & box)
{
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    const std::array<Point2, 2> edge{poly[i], poly[i + 1]};
    if (polygons_intersect(edge, box)) {
      return true;
    }
  }
  return poly.size() == 1 && point_in_polygon(box, poly.front());
}

}  // namespace

double arclength(const Polyline & poly)
{
  double total = 0.0;
  for (std::size_t i = 1; i < poly.size(); ++i) {
    total += distance(poly[i - 1], poly[i]);
  }
  return total;
}

Polyline resample_polyline(const Polyline & poly, std::size_t n)
{
  if (n < 2) {
    throw std::invalid_argument("resample_polyline: n must be >= 2");
  }
  if (poly.size() < 2) {
    throw std::invalid_argument("resample_polyline: need at least 2 points");
  }
  std::vector<double> cumulative(poly.size(), 0.0);
  for (std::size_t i = 1; i < poly.size(); ++i) {
    cumulative[i] = cumulative[i - 1] + distance(poly[i - 1], poly[i]);
  }
  const double total = cumulative.back();
  if (!(total > 0.0)) {
    throw ZeroLengthPolyline();
  }

  Polyline out;
  out.reserve(n);
  out.push_back(poly.front());
  std::size_t seg = 1;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double target = total * static_cast<double>(k) / static_cast<double>(n - 1);
    while (seg + 1 < poly.size() && cumulative[seg] < target) {
      ++seg;
    }
    const double seg_len = cumulative[seg] - cumulative[seg - 1];
    const double t = seg_len > 0.0 ? (target - cumulative[seg - 1]) / seg_len : 0.0;
    const Point2 & a = poly[seg - 1];
    const Point2 & b = poly[seg];
    out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  out.push_back(poly.back());
  return out;
}

bool element_intersects(const LaneSegment & seg, const Fov & bounds)
{
  const auto box = fov_ring(bounds);
  try {
    const Polygon poly = element_polygon(seg);
    return polygons_intersect(poly.ring, box);
  } catch (const DegenerateElement &) {
    return polyline_touches(seg.centerline, box) || polyline_touches(seg.left_boundary, box) ||
           polyline_touches(seg.right_boundary, box);
  }
}

LocalMap crop_to_fov(const LocalMap & map, const Fov & bounds)
{
  LocalMap out;
  out.frame_id = map.frame_id;
  out.fov = bounds;
  for (const auto & e : map.elements) {
    if (element_intersects(e, bounds)) {
      out.elements.push_back(e);
    }
  }
  return out;
}

std::string_view to_string(ViolationKind kind)
{
  switch (kind) {
    case ViolationKind::PointCount:
      return "PointCountViolation";
    case ViolationKind::NonFinite:
      return "NonFiniteCoordinate";
    case ViolationKind::DuplicateId:
      return "DuplicateId";
    case ViolationKind::EmptyId:
      return "EmptyId";
    case ViolationKind::DanglingSuccessor:
      return "DanglingSuccessor";
    case ViolationKind::Degenerate:
      return "DegenerateElement";
    case ViolationKind::OutsideFov:
      return "OutsideFov";
    case ViolationKind::BadFov:
      return "BadFov";
  }
  return "Unknown";
}

std::vector<Violation> validate_map(const LocalMap & map)
{
  std::vector<Violation> out;
  if (!map.fov.well_formed()) {
    out.push_back({ViolationKind::BadFov, "", "fov must satisfy min < max on both axes"});
  }

  std::unordered_set<std::string> ids;
  for (const auto & e : map.elements) {
    if (e.id.empty()) {
      out.push_back({ViolationKind::EmptyId, e.id, "element id is empty"});
    } else if (!ids.insert(e.id).second) {
      out.push_back({ViolationKind::DuplicateId, e.id, "id appears more than once"});
    }
  }

  for (const auto & e : map.elements) {
    bool shape_ok = true;
    const std::pair<const char *, const Polyline *> lines[] = {
      {"centerline", &e.centerline}, {"left_boundary", &e.left_boundary}, {"right_boundary", &e.right_boundary}};
    for (const auto & [name, poly] : lines) {
      if (poly->size() != kCanonicalPoints) {
        out.push_back(
          {ViolationKind::PointCount, e.id,
           std::string(name) + " has " + std::to_string(poly->size()) + " points, expected 10"});
        shape_ok = false;
      }
      if (!all_finite(*poly)) {
        out.push_back({ViolationKind::NonFinite, e.id, std::string(name) + " has a non-finite coordinate"});
        shape_ok = false;
      }
    }
    for (const auto & succ : e.successors) {
      if (ids.count(succ) == 0) {
        out.push_back({ViolationKind::DanglingSuccessor, e.id, "successor '" + succ + "' not in map"});
      }
    }
    if (!shape_ok || e.left_boundary.size() < 2 || e.right_boundary.size() < 2) {
      continue;
    }
    try {
      const Polygon poly = element_polygon(e);
      if (map.fov.well_formed() && !polygons_intersect(poly.ring, fov_ring(map.fov))) {
        out.push_back({ViolationKind::OutsideFov, e.id, "element does not intersect the fov"});
      }
    } catch (const DegenerateElement &) {
      out.push_back({ViolationKind::Degenerate, e.id, "left and right boundaries enclose no area"});
    }
  }
  return out;
}

LocalMap load_map(std::string_view json_text, std::vector<std::string> * warnings)
{
  const Json doc = parse_json(json_text);
  if (!doc.is_object()) {
    throw SchemaError("(root)", "expected an object");
  }
  LocalMap map;
  map.frame_id = require_string(doc, "frame_id", "");
  map.fov = fov_from_json(require(doc, "fov", ""), "fov");
  const Json & elems = require(doc, "elements", "");
  if (!elems.is_array()) {
    throw SchemaError("elements", "expected an array");
  }
  map.elements.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    map.elements.push_back(segment_from_json(elems[i], "elements[" + std::to_string(i) + "]", warnings));
  }
  return map;
}

std::string save_map(const LocalMap & map)
{
  Json doc = Json::object();
  doc["frame_id"] = map.frame_id;
  doc["fov"] = to_json(map.fov);
  Json elems = Json::array();
  for (const auto & e : map.elements) {
    elems.push_back(to_json(e));
  }
  doc["elements"] = std::move(elems);
  return dump_json(doc);
}

std::string read_text_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string & path, std::string_view contents)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw DataError("cannot write '" + path + "'");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace mapchange
