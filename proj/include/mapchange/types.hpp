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

#ifndef MAPCHANGE__TYPES_HPP_
#define MAPCHANGE__TYPES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mapchange
{

/// Ego-frame point in meters: x forward, y left.
struct Point2
{
  double x{0.0};
  double y{0.0};

  friend bool operator==(const Point2 &, const Point2 &) = default;
};

using Polyline = std::vector<Point2>;

/// Canonical number of points per polyline in a lane segment.
inline constexpr std::size_t kCanonicalPoints = 10;

/// Ordinals are frozen: they are used both in the JSON format and in the
/// one-hot encoding.
enum class BoundaryType : std::uint8_t { NonVisible = 0, Dashed = 1, Solid = 2 };

inline constexpr std::size_t kBoundaryTypeCount = 3;

enum class ElementClass : std::uint8_t { Lane, PedestrianCrossing };

enum class ChangeLabel : std::uint8_t { Unchanged, Inserted, Deleted };

/// A map element: centerline plus left and right boundary polylines.
struct LaneSegment
{
  std::string id;
  ElementClass element_class{ElementClass::Lane};
  Polyline centerline;
  Polyline left_boundary;
  Polyline right_boundary;
  BoundaryType left_type{BoundaryType::NonVisible};
  BoundaryType right_type{BoundaryType::NonVisible};
  std::vector<std::string> successors;

  friend bool operator==(const LaneSegment &, const LaneSegment &) = default;
};

/// Axis-aligned field of view in meters.
struct Fov
{
  double xmin{-25.0};
  double ymin{-25.0};
  double xmax{25.0};
  double ymax{25.0};

  bool well_formed() const { return xmin < xmax && ymin < ymax; }

  friend bool operator==(const Fov &, const Fov &) = default;
};

struct LocalMap
{
  std::string frame_id;
  Fov fov;
  std::vector<LaneSegment> elements;

  friend bool operator==(const LocalMap &, const LocalMap &) = default;
};

std::string_view to_string(ElementClass c);
std::string_view to_string(ChangeLabel label);

/// Throws std::invalid_argument on unknown names.
ElementClass element_class_from_string(std::string_view name);
ChangeLabel change_label_from_string(std::string_view name);

}  // namespace mapchange

#endif  // MAPCHANGE__TYPES_HPP_
