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
#include <numbers>
#include <map>
#include <set>

#include "mapchange/dataset_io.hpp"
#include "mapchange/errors.hpp"
#include "mapchange/geometry.hpp"
#include "mapchange/map_model.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mapchange;

namespace
{

LocalMap many_crossings(std::size_t n)
{
  LocalMap m;
  m.frame_id = "grid";
  m.elements.push_back(support::lane("host", -20, 20, -1.75, 1.75));
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -20.0 + static_cast<double>(i % 40);
    const double y = -20.0 + static_cast<double>(i / 40) * 0.04;
    m.elements.push_back(support::crossing("c" + std::to_string(i), x, x + 0.5, y, y + 2.0));
  }
  return m;
}

void expect_bookkeeping(const LocalMap & world, const SynthesisResult & r)
{
  const std::size_t ins = r.gt.count(ChangeLabel::Inserted);
  const std::size_t del = r.gt.count(ChangeLabel::Deleted);
  EXPECT_EQ(r.stale.elements.size() + ins - del, world.elements.size());
  std::set<std::string> ids;
  for (const auto & e : r.gt.elements) {
    EXPECT_TRUE(ids.insert(e.element.id).second) << "duplicate label for " << e.element.id;
  }
  std::map<std::string, const LaneSegment *> world_by_id;
  for (const auto & e : world.elements) {
    world_by_id[e.id] = &e;
  }
  std::map<std::string, const LaneSegment *> stale_by_id;
  for (const auto & e : r.stale.elements) {
    stale_by_id[e.id] = &e;
  }
  for (const auto & e : r.gt.elements) {
    switch (e.label) {
      case ChangeLabel::Unchanged:
        ASSERT_TRUE(stale_by_id.count(e.element.id));
        EXPECT_EQ(stale_by_id[e.element.id]->centerline, world_by_id[e.element.id]->centerline);
        break;
      case ChangeLabel::Inserted:
        EXPECT_FALSE(stale_by_id.count(e.element.id));
        EXPECT_TRUE(world_by_id.count(e.element.id));
        break;
      case ChangeLabel::Deleted:
        EXPECT_TRUE(stale_by_id.count(e.element.id));
        EXPECT_FALSE(world_by_id.count(e.element.id));
        break;
    }
  }
}

double polygon_width_x(const LaneSegment & s, double * lo, double * hi)
{
  const Polygon p = element_polygon(s);
  *lo = 1e9;
  *hi = -1e9;
  for (const auto & q : p.ring) {
    *lo = std::min(*lo, q.x);
    *hi = std::max(*hi, q.x);
  }
  return *hi - *lo;
}

}  // namespace

TEST(Insertions, ZeroProbabilityKeepsWorld)
{
  const LocalMap world = support::road_map();
  PerturbationConfig cfg;
  const auto r = make_insertion_examples(world, cfg);
  EXPECT_EQ(r.stale, world);
  EXPECT_FALSE(r.gt.has_change());
}

TEST(Insertions, ProbabilityOneRemovesEveryCrossing)
{
  LocalMap world = support::road_map();
  world.elements.push_back(support::crossing("crossing_2", 14, 16, -5, 5));
  PerturbationConfig cfg;
  cfg.deletion_probability = 1.0;
  const auto r = make_insertion_examples(world, cfg);
  for (const auto & e : r.stale.elements) {
    EXPECT_EQ(e.element_class, ElementClass::Lane);
  }
  EXPECT_EQ(r.gt.count(ChangeLabel::Inserted), 3u);
  EXPECT_EQ(r.gt.count(ChangeLabel::Deleted), 0u);
}

TEST(Insertions, BinomialRemovalCount)
{
  const LocalMap world = many_crossings(1000);
  PerturbationConfig cfg;
  cfg.deletion_probability = 0.5;
  cfg.rng_seed = 1234;
  const auto r = make_insertion_examples(world, cfg);
  const double removed = static_cast<double>(r.gt.count(ChangeLabel::Inserted));
  EXPECT_LE(std::abs(removed - 500.0), 3.0 * std::sqrt(1000 * 0.25));
}

TEST(Insertions, ExactRemovalsAndSuccessorStripping)
{
  LocalMap world = support::road_map();
  world.elements[0].successors.push_back("crossing_0");
  PerturbationConfig cfg;
  cfg.exact_removals = 2;
  const auto r = make_insertion_examples(world, cfg);
  EXPECT_EQ(r.gt.count(ChangeLabel::Inserted), 2u);
  EXPECT_TRUE(validate_map(r.stale).empty());
}

TEST(Deletions, ZeroRateKeepsWorld)
{
  const LocalMap world = support::road_map();
  PerturbationConfig cfg;
  const auto r = make_deletion_examples(world, cfg);
  EXPECT_EQ(r.stale, world);
}

TEST(Deletions, ForcedSingleInsertionOnStraightLane)
{
  LocalMap world;
  world.frame_id = "one_lane";
  world.elements.push_back(support::lane("l", -20, 20, -1.75, 1.75));
  PerturbationConfig cfg;
  cfg.exact_additions = 1;
  cfg.rng_seed = 99;
  const auto r = make_deletion_examples(world, cfg);
  ASSERT_EQ(r.stale.elements.size(), 2u);
  ASSERT_EQ(r.gt.count(ChangeLabel::Deleted), 1u);
  const LabeledElement & del = r.gt.elements.back();
  EXPECT_EQ(del.label, ChangeLabel::Deleted);
  EXPECT_EQ(del.element.element_class, ElementClass::PedestrianCrossing);
  EXPECT_TRUE(polygons_intersect(element_polygon(del.element).ring, element_polygon(world.elements[0]).ring));
  EXPECT_TRUE(validate_map(r.stale).empty());
}

TEST(Deletions, NoHostLane)
{
  LocalMap world;
  world.elements.push_back(support::crossing("c", 0, 4, 0, 3));
  PerturbationConfig cfg;
  cfg.insertion_rate = 1.0;
  EXPECT_THROW(make_deletion_examples(world, cfg), NoHostLane);
}

TEST(Deletions, Deterministic)
{
  const LocalMap world = support::road_map();
  PerturbationConfig cfg;
  cfg.insertion_rate = 3.0;
  cfg.rng_seed = 5;
  const auto a = make_deletion_examples(world, cfg);
  const auto b = make_deletion_examples(world, cfg);
  EXPECT_EQ(save_map(a.stale), save_map(b.stale));
  EXPECT_EQ(save_ground_truth(a.gt), save_ground_truth(b.gt));
}

TEST(GenerateCrossing, StraightLaneRectangle)
{
  const LaneSegment host = support::lane("h", 0, 20, 0, 3.5);
  const LaneSegment c = generate_crossing(host, 0.5, 4.0, "c");
  EXPECT_EQ(c.element_class, ElementClass::PedestrianCrossing);
  EXPECT_EQ(c.left_type, BoundaryType::NonVisible);
  EXPECT_EQ(c.right_type, BoundaryType::NonVisible);
  EXPECT_EQ(c.centerline.size(), 10u);
  const Polygon p = element_polygon(c);
  EXPECT_NEAR(oracle::shoelace(p.ring), 14.0, 1e-9);
  for (const auto & q : p.ring) {
    EXPECT_TRUE(std::abs(q.x - 8.0) < 1e-9 || std::abs(q.x - 12.0) < 1e-9);
    EXPECT_GE(q.y, -1e-9);
    EXPECT_LE(q.y, 3.5 + 1e-9);
  }
}

TEST(GenerateCrossing, StartIsClampedInside)
{
  const LaneSegment host = support::lane("h", 0, 20, 0, 3.5);
  double lo = 0;
  double hi = 0;
  polygon_width_x(generate_crossing(host, 0.0, 4.0, "c"), &lo, &hi);
  EXPECT_NEAR(lo, 0.0, 1e-9);
  EXPECT_NEAR(hi, 4.0, 1e-9);
}

TEST(GenerateCrossing, CurvedHostArea)
{
  // Quarter-ish arc of radius 30 with a 3.5 m wide lane.
  LaneSegment host;
  host.id = "curve";
  host.element_class = ElementClass::Lane;
  const auto arc = [](double r) {
    Polyline l;
    for (int i = 0; i < 10; ++i) {
      const double a = 0.6 * i / 9.0;
      l.push_back({r * std::sin(a), 30.0 - r * std::cos(a)});
    }
    return l;
  };
  host.centerline = arc(30.0);
  host.left_boundary = arc(30.0 - 1.75);
  host.right_boundary = arc(30.0 + 1.75);
  for (const double s : {0.2, 0.5, 0.8}) {
    const LaneSegment c = generate_crossing(host, s, 4.0, "c");
    const double area = oracle::shoelace(element_polygon(c).ring);
    EXPECT_NEAR(area, 4.0 * 3.5, 0.1 * 4.0 * 3.5) << s;
  }
}

TEST(GenerateCrossing, Preconditions)
{
  const LaneSegment host = support::lane("h", 0, 20, 0, 3.5);
  EXPECT_THROW(generate_crossing(host, 0.5, 0.0, "c"), std::invalid_argument);
  EXPECT_THROW(generate_crossing(host, 1.5, 4.0, "c"), std::invalid_argument);
  EXPECT_THROW(generate_crossing(support::crossing("x", 0, 1, 0, 1), 0.5, 4.0, "c"), std::invalid_argument);
}

TEST(Mixed, BookkeepingOverConfigsAndSeeds)
{
  const LocalMap world = support::road_map();
  for (const double p : {0.0, 0.3, 1.0}) {
    for (const double rate : {0.0, 0.7, 3.0}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        PerturbationConfig cfg;
        cfg.deletion_probability = p;
        cfg.insertion_rate = rate;
        cfg.rng_seed = seed;
        for (const auto mode : {PerturbationMode::Insertions, PerturbationMode::Deletions, PerturbationMode::Mixed}) {
          expect_bookkeeping(world, perturb(world, mode, cfg));
        }
      }
    }
  }
}

TEST(Mixed, TargetRatioAndExactCounts)
{
  const LocalMap world = many_crossings(200);
  PerturbationConfig cfg;
  cfg.deletion_probability = 0.5;
  cfg.target_ratio = 9.0;
  double ins = 0;
  double del = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    cfg.rng_seed = seed;
    const auto r = make_mixed_examples(world, cfg);
    ins += static_cast<double>(r.gt.count(ChangeLabel::Inserted));
    del += static_cast<double>(r.gt.count(ChangeLabel::Deleted));
  }
  EXPECT_NEAR(ins / del, 9.0, 1.5);

  PerturbationConfig exact;
  exact.exact_removals = 1;
  exact.exact_additions = 2;
  const auto r = make_mixed_examples(support::road_map(), exact);
  EXPECT_EQ(r.gt.count(ChangeLabel::Inserted), 1u);
  EXPECT_EQ(r.gt.count(ChangeLabel::Deleted), 2u);
}

TEST(Config, RejectsOutOfRange)
{
  PerturbationConfig cfg;
  cfg.deletion_probability = 1.5;
  EXPECT_THROW(cfg.check(), std::invalid_argument);
  cfg.deletion_probability = 0.5;
  cfg.insertion_rate = -1;
  EXPECT_THROW(cfg.check(), std::invalid_argument);
}
