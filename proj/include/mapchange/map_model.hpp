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

#ifndef MAPCHANGE__MAP_MODEL_HPP_
#define MAPCHANGE__MAP_MODEL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mapchange/types.hpp"

namespace mapchange
{

/// Resamples `poly` to `n` points at equal arclength spacing. The first and
/// last points are preserved exactly. Throws ZeroLengthPolyline when the
/// total arclength is zero and std::invalid_argument when n < 2 or the
/// input has fewer than two points.
Polyline resample_polyline(const Polyline & poly, std::size_t n);

/// Total length of the polyline in meters.
double arclength(const Polyline & poly);

/// True if the element's polygon (or, for a degenerate element, any of its
/// polylines) touches `bounds`.
bool element_intersects(const LaneSegment & seg, const Fov & bounds);

/// Keeps every element whose polygon intersects `bounds`. Elements are kept
/// whole, never clipped, so the 10-point form survives.
LocalMap crop_to_fov(const LocalMap & map, const Fov & bounds);

enum class ViolationKind : std::uint8_t {
  PointCount,
  NonFinite,
  DuplicateId,
  EmptyId,
  DanglingSuccessor,
  Degenerate,
  OutsideFov,
  BadFov,
};

struct Violation
{
  ViolationKind kind;
  std::string element_id;
  std::string detail;
};

std::string_view to_string(ViolationKind kind);

/// Returns one entry per broken invariant; empty iff the map is valid.
std::vector<Violation> validate_map(const LocalMap & map);

/// Parses the JSON map format. Polylines whose point count differs from the
/// canonical 10 are resampled; a note is appended to `warnings` (if given)
/// for each. Throws ParseError or SchemaError.
LocalMap load_map(std::string_view json_text, std::vector<std::string> * warnings = nullptr);

/// Serializes to the JSON map format (2-space indent, trailing newline).
std::string save_map(const LocalMap & map);

/// Reads a whole file. Throws DataError if it cannot be opened.
std::string read_text_file(const std::string & path);
void write_text_file(const std::string & path, std::string_view contents);

}  // namespace mapchange

#endif  // MAPCHANGE__MAP_MODEL_HPP_
