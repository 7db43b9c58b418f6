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

// Fixture builders shared by the test binaries.

#ifndef MAPCHANGE__TESTS__SUPPORT_HPP_
#define MAPCHANGE__TESTS__SUPPORT_HPP_

#include <filesystem>
#include <random>
#include <string>

#include "mapchange/change_synthesis.hpp"
#include "mapchange/dataset.hpp"
#include "mapchange/types.hpp"

namespace support
{

using namespace mapchange;

inline Polyline line(Point2 a, Point2 b, std::size_t n = kCanonicalPoints)
{
  Polyline out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    out[i] = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  }
  return out;
}

// Lane along +x from x0 to x1 between y_right and y_left.
inline LaneSegment lane(const std::string & id, double x0, double x1, double y_right, double y_left)
{
  LaneSegment s;
  s.id = id;
  s.element_class = ElementClass::Lane;
  const double yc = 0.5 * (y_left + y_right);
  s.centerline = line({x0, yc}, {x1, yc});
  s.left_boundary = line({x0, y_left}, {x1, y_left});
  s.right_boundary = line({x0, y_right}, {x1, y_right});
  s.left_type = BoundaryType::Dashed;
  s.right_type = BoundaryType::Solid;
  return s;
}

// Axis-aligned crossing covering [x0,x1] x [y0,y1], walked along +y.
inline LaneSegment crossing(const std::string & id, double x0, double x1, double y0, double y1)
{
  LaneSegment s;
  s.id = id;
  s.element_class = ElementClass::PedestrianCrossing;
  const double xc = 0.5 * (x0 + x1);
  s.centerline = line({xc, y0}, {xc, y1});
  s.left_boundary = line({x0, y0}, {x0, y1});
  s.right_boundary = line({x1, y0}, {x1, y1});
  s.left_type = BoundaryType::NonVisible;
  s.right_type = BoundaryType::NonVisible;
  return s;
}

inline LaneSegment translated(LaneSegment s, double dx, double dy)
{
  for (Polyline * l : {&s.centerline, &s.left_boundary, &s.right_boundary}) {
    for (auto & p : *l) {
      p.x += dx;
      p.y += dy;
    }
  }
  return s;
}

// Three-lane straight road with two crossings, inside the default fov.
inline LocalMap road_map(const std::string & frame_id = "fixture")
{
  LocalMap m;
  m.frame_id = frame_id;
  m.elements.push_back(lane("lane_0", -20.0, 0.0, -5.25, -1.75));
  m.elements.push_back(lane("lane_1", -20.0, 0.0, -1.75, 1.75));
  m.elements.push_back(lane("lane_2", -20.0, 0.0, 1.75, 5.25));
  m.elements.push_back(lane("lane_3", 0.0, 20.0, -1.75, 1.75));
  m.elements[1].successors.push_back("lane_3");
  m.elements.push_back(crossing("crossing_0", -12.0, -8.0, -5.25, 5.25));
  m.elements.push_back(crossing("crossing_1", 8.0, 12.0, -1.75, 1.75));
  return m;
}

inline PredictedElement predicted(const LaneSegment & g, ChangeLabel label, double score = 1.0)
{
  PredictedElement p;
  p.geometry = g;
  p.score = score;
  p.ins_prob = label == ChangeLabel::Inserted ? 1.0 : 0.0;
  p.del_prob = label == ChangeLabel::Deleted ? 1.0 : 0.0;
  return p;
}

// A frame whose prediction reproduces its ground truth.
inline FrameRecord perfect_frame(const std::string & id, const std::vector<LabeledElement> & gt)
{
  FrameRecord f;
  f.ground_truth.frame_id = id;
  f.prediction.frame_id = id;
  f.stale.frame_id = id;
  for (const auto & e : gt) {
    f.ground_truth.elements.push_back(e);
    f.prediction.elements.push_back(predicted(e.element, e.label));
    if (e.label != ChangeLabel::Inserted) {
      f.stale.elements.push_back(e.element);
    }
  }
  return f;
}

inline std::string temp_dir(const std::string & name)
{
  const auto dir = std::filesystem::temp_directory_path() / ("mapchange_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

inline std::string fixture(const std::string & name)
{
  return std::string(MAPCHANGE_FIXTURE_DIR) + "/" + name;
}

}  // namespace support

#endif  // MAPCHANGE__TESTS__SUPPORT_HPP_
