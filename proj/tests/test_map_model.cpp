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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "mapchange/errors.hpp"
#include "mapchange/map_model.hpp"
#include "support.hpp"

using namespace mapchange;
using support::lane;
using support::road_map;

TEST(Resample, StraightLineUniform)
{
  const Polyline out = resample_polyline({{0, 0}, {9, 0}}, 10);
  ASSERT_EQ(out.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_NEAR(out[i].x, static_cast<double>(i), 1e-12);
    EXPECT_NEAR(out[i].y, 0.0, 1e-12);
  }
}

TEST(Resample, TwoPointsKeepsEndpoints)
{
  const Polyline in{{1.5, -2}, {3, 4}, {7.25, 0.125}};
  const Polyline out = resample_polyline(in, 2);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.front(), in.front());
  EXPECT_EQ(out.back(), in.back());
}

TEST(Resample, LShape)
{
  const Polyline out = resample_polyline({{0, 0}, {2, 0}, {2, 2}}, 5);
  const Polyline want{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}};
  ASSERT_EQ(out.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(out[i].x, want[i].x, 1e-12);
    EXPECT_NEAR(out[i].y, want[i].y, 1e-12);
  }
}

TEST(Resample, ZeroLengthThrows)
{
  EXPECT_THROW(resample_polyline({{1, 1}, {1, 1}, {1, 1}}, 10), ZeroLengthPolyline);
}

TEST(Resample, IdempotentOnEqualChordInputs)
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int t = 0; t < 200; ++t) {
    const Polyline in = support::line({u(rng), u(rng)}, {u(rng), u(rng)}, 3 + t % 7);
    const Polyline once = resample_polyline(in, 10);
    const Polyline twice = resample_polyline(once, 10);
    for (std::size_t i = 0; i < 10; ++i) {
      EXPECT_NEAR(once[i].x, twice[i].x, 1e-9);
      EXPECT_NEAR(once[i].y, twice[i].y, 1e-9);
    }
    EXPECT_NEAR(arclength(once), arclength(in), 1e-9);
  }
}

TEST(Resample, PreservesArclengthAtSampleStations)
{
  // Vertices already at the 10 stations of an L: resampling keeps the length.
  const Polyline l = resample_polyline({{0, 0}, {4.5, 0}, {4.5, 4.5}}, 3);
  EXPECT_NEAR(arclength(resample_polyline(l, 3)), 9.0, 1e-9);
}

TEST(Crop, InsideOutsideStraddling)
{
  LocalMap m;
  m.frame_id = "f";
  m.elements.push_back(lane("inside", -10, 10, -1.75, 1.75));
  m.elements.push_back(lane("outside", 40, 60, -1.75, 1.75));
  m.elements.push_back(lane("straddle", 20, 40, -1.75, 1.75));
  const LocalMap out = crop_to_fov(m, Fov{});
  ASSERT_EQ(out.elements.size(), 2u);
  EXPECT_EQ(out.elements[0].id, "inside");
  EXPECT_EQ(out.elements[1].id, "straddle");
  EXPECT_EQ(out.elements[1], m.elements[2]);
}

TEST(Crop, PolygonRectangleOracle)
{
  // Diagonal lane whose boundaries stay outside the fov corners but whose
  // polygon straddles the corner region is decided by polygon overlap.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-40, 40);
  for (int t = 0; t < 300; ++t) {
    const double x0 = u(rng);
    const double y0 = u(rng);
    const double w = 2.0 + std::abs(u(rng)) / 4.0;
    const LaneSegment seg = lane("s", x0, x0 + w, y0, y0 + 3.0);
    const bool overlaps = x0 < 25.0 && x0 + w > -25.0 && y0 < 25.0 && y0 + 3.0 > -25.0;
    EXPECT_EQ(element_intersects(seg, Fov{}), overlaps) << x0 << " " << y0;
  }
}

TEST(Validate, WellFormedMap) { EXPECT_TRUE(validate_map(road_map()).empty()); }

TEST(Validate, NinePointCenterline)
{
  LocalMap m = road_map();
  m.elements[0].centerline.pop_back();
  const auto v = validate_map(m);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::PointCount);
  EXPECT_EQ(v[0].element_id, "lane_0");
}

TEST(Validate, DuplicateIds)
{
  LocalMap m = road_map();
  m.elements[2].id = "lane_0";
  const auto v = validate_map(m);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, ViolationKind::DuplicateId);
}

TEST(Validate, OtherRules)
{
  LocalMap m = road_map();
  m.elements[0].successors.push_back("missing");
  m.elements[2].left_boundary = m.elements[2].right_boundary;
  m.elements[3] = lane("far", 100, 120, 0, 3);
  m.elements[4].centerline[3].x = std::nan("");
  std::set<ViolationKind> kinds;
  for (const auto & v : validate_map(m)) {
    kinds.insert(v.kind);
  }
  EXPECT_TRUE(kinds.count(ViolationKind::DanglingSuccessor));
  EXPECT_TRUE(kinds.count(ViolationKind::Degenerate));
  EXPECT_TRUE(kinds.count(ViolationKind::OutsideFov));
  EXPECT_TRUE(kinds.count(ViolationKind::NonFinite));
}

TEST(Json, RoundTrip)
{
  const LocalMap m = road_map();
  const std::string text = save_map(m);
  const LocalMap back = load_map(text);
  EXPECT_EQ(back, m);
  EXPECT_EQ(save_map(back), text);
  EXPECT_TRUE(validate_map(back).empty());
}

TEST(Json, RoundTripIrrationalCoordinates)
{
  LocalMap m = road_map();
  for (auto & p : m.elements[0].centerline) {
    p.x = std::sqrt(2.0) * p.x + 1.0 / 3.0;
  }
  EXPECT_EQ(load_map(save_map(m)), m);
}

TEST(Json, TruncatedIsParseError)
{
  const std::string text = save_map(road_map());
  try {
    load_map(text.substr(0, text.size() / 2));
    FAIL();
  } catch (const ParseError & e) {
    EXPECT_GT(e.line, 0u);
  }
}

TEST(Json, BoundaryCodeFiveIsSchemaError)
{
  std::string text = save_map(road_map());
  const auto pos = text.find("\"left_type\": 1");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 14, "\"left_type\": 5");
  try {
    load_map(text);
    FAIL();
  } catch (const SchemaError & e) {
    EXPECT_NE(e.field.find("left_type"), std::string::npos);
  }
}

TEST(Json, NonCanonicalPointCountIsResampledWithWarning)
{
  const std::string text = R"({"frame_id": "f", "fov": [-25, -25, 25, 25], "elements": [
    {"id": "a", "class": "lane", "centerline": [[0, 0], [9, 0]],
     "left_boundary": [[0, 1], [4.5, 1], [9, 1]], "right_boundary": [[0, -1], [9, -1]],
     "left_type": 0, "right_type": 2}]})";
  std::vector<std::string> warnings;
  const LocalMap m = load_map(text, &warnings);
  ASSERT_EQ(m.elements.size(), 1u);
  EXPECT_EQ(m.elements[0].centerline.size(), 10u);
  EXPECT_NEAR(m.elements[0].centerline[4].x, 4.0, 1e-12);
  EXPECT_EQ(warnings.size(), 3u);
  EXPECT_TRUE(m.elements[0].successors.empty());
}

TEST(Json, MissingFieldNamesIt)
{
  try {
    load_map(R"({"frame_id": "f", "elements": []})");
    FAIL();
  } catch (const SchemaError & e) {
    EXPECT_EQ(e.field, "fov");
  }
}
