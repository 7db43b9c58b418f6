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

#include "mapchange/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mapchange/errors.hpp"
#include "mapchange/map_model.hpp"

namespace mapchange
{

namespace
{

void line_and_column(std::string_view text, std::size_t byte, std::size_t & line, std::size_t & col)
{
  line = 1;
  col = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

BoundaryType boundary_from_json(const Json & obj, const char * key, const std::string & path)
{
  const Json & v = require(obj, key, path);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw SchemaError(path + "." + key, "expected integer boundary code 0, 1 or 2");
  }
  const auto code = v.get<std::int64_t>();
  if (code < 0 || code > 2) {
    throw SchemaError(path + "." + key, "boundary code " + std::to_string(code) + " out of range 0..2");
  }
  return static_cast<BoundaryType>(code);
}

}  // namespace

Json parse_json(std::string_view text)
{
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error & e) {
    std::size_t line = 0;
    std::size_t col = 0;
    line_and_column(text, e.byte == 0 ? 0 : e.byte - 1, line, col);
    throw ParseError(
      "JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
        ": " + e.what(),
      line, col);
  }
}

std::string dump_json(const Json & doc) { return doc.dump(2) + "\n"; }

const Json & require(const Json & obj, const char * key, const std::string & path)
{
  if (!obj.is_object()) {
    throw SchemaError(path, "expected an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(path.empty() ? std::string(key) : path + "." + key, "missing field");
  }
  return *it;
}

double require_number(const Json & obj, const char * key, const std::string & path)
{
  const Json & v = require(obj, key, path);
  if (!v.is_number()) {
    throw SchemaError(path.empty() ? std::string(key) : path + "." + key, "expected a number");
  }
  return v.get<double>();
}

std::string require_string(const Json & obj, const char * key, const std::string & path)
{
  const Json & v = require(obj, key, path);
  if (!v.is_string()) {
    throw SchemaError(path.empty() ? std::string(key) : path + "." + key, "expected a string");
  }
  return v.get<std::string>();
}

Json to_json(const Point2 & p) { return Json::array({p.x, p.y}); }

Json to_json(const Polyline & poly)
{
  Json arr = Json::array();
  for (const auto & p : poly) {
    arr.push_back(to_json(p));
  }
  return arr;
}

Json to_json(const Fov & fov) { return Json::array({fov.xmin, fov.ymin, fov.xmax, fov.ymax}); }

Json to_json(const LaneSegment & seg)
{
  Json obj = Json::object();
  obj["id"] = seg.id;
  obj["class"] = std::string(to_string(seg.element_class));
  obj["centerline"] = to_json(seg.centerline);
  obj["left_boundary"] = to_json(seg.left_boundary);
  obj["right_boundary"] = to_json(seg.right_boundary);
  obj["left_type"] = static_cast<int>(seg.left_type);
  obj["right_type"] = static_cast<int>(seg.right_type);
  obj["successors"] = seg.successors;
  return obj;
}

Polyline polyline_from_json(const Json & arr, const std::string & path)
{
  if (!arr.is_array()) {
    throw SchemaError(path, "expected an array of [x, y] points");
  }
  Polyline poly;
  poly.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json & pt = arr[i];
    const std::string where = path + "[" + std::to_string(i) + "]";
    if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number()) {
      throw SchemaError(where, "expected [x, y] with numeric coordinates");
    }
    poly.push_back({pt[0].get<double>(), pt[1].get<double>()});
  }
  if (poly.size() < 2) {
    throw SchemaError(path, "polyline needs at least 2 points");
  }
  return poly;
}

LaneSegment segment_from_json(const Json & obj, const std::string & path, std::vector<std::string> * warnings)
{
  if (!obj.is_object()) {
    throw SchemaError(path, "expected an object");
  }
  LaneSegment seg;
  seg.id = require_string(obj, "id", path);
  const std::string cls = require_string(obj, "class", path);
  try {
    seg.element_class = element_class_from_string(cls);
  } catch (const std::invalid_argument &) {
    throw SchemaError(path + ".class", "expected \"lane\" or \"pedestrian_crossing\", got \"" + cls + "\"");
  }

  const auto read_line = [&](const char * key) {
    const std::string where = path + "." + key;
    Polyline poly = polyline_from_json(require(obj, key, path), where);
    if (poly.size() != kCanonicalPoints) {
      try {
        const std::size_t original = poly.size();
        poly = resample_polyline(poly, kCanonicalPoints);
        if (warnings != nullptr) {
          warnings->push_back(
            where + ": resampled from " + std::to_string(original) + " to " +
            std::to_string(kCanonicalPoints) + " points");
        }
      } catch (const ZeroLengthPolyline &) {
        throw SchemaError(where, "zero-length polyline cannot be resampled");
      }
    }
    return poly;
  };
  seg.centerline = read_line("centerline");
  seg.left_boundary = read_line("left_boundary");
  seg.right_boundary = read_line("right_boundary");
  seg.left_type = boundary_from_json(obj, "left_type", path);
  seg.right_type = boundary_from_json(obj, "right_type", path);

  if (const auto it = obj.find("successors"); it != obj.end()) {
    if (!it->is_array()) {
      throw SchemaError(path + ".successors", "expected an array of ids");
    }
    for (const auto & s : *it) {
      if (!s.is_string()) {
        throw SchemaError(path + ".successors", "expected string ids");
      }
      seg.successors.push_back(s.get<std::string>());
    }
  }
  return seg;
}

Fov fov_from_json(const Json & arr, const std::string & path)
{
  if (!arr.is_array() || arr.size() != 4) {
    throw SchemaError(path, "expected [xmin, ymin, xmax, ymax]");
  }
  for (const auto & v : arr) {
    if (!v.is_number()) {
      throw SchemaError(path, "expected numeric bounds");
    }
  }
  Fov fov{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>(), arr[3].get<double>()};
  if (!fov.well_formed()) {
    throw SchemaError(path, "bounds must satisfy min < max on both axes");
  }
  return fov;
}

}  // namespace mapchange
