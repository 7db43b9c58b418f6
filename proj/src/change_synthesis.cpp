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

#include "mapchange/change_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "mapchange/errors.hpp"
#include "mapchange/geometry.hpp"
#include "mapchange/map_model.hpp"

namespace mapchange
{

namespace
{

constexpr int kPlacementAttempts = 16;

std::size_t draw_poisson(std::mt19937_64 & rng, double mean)
{
  if (!(mean > 0.0)) {
    return 0;
  }
  std::poisson_distribution<std::size_t> dist(mean);
  return dist(rng);
}

Polyline straight_line(const Point2 & a, const Point2 & b)
{
  Polyline out;
  out.reserve(kCanonicalPoints);
  for (std::size_t i = 0; i < kCanonicalPoints; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(kCanonicalPoints - 1);
    out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  out.back() = b;
  return out;
}

double point_to_polyline(const Point2 & p, const Polyline & poly)
{
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    const Point2 & a = poly[i];
    const Point2 & b = poly[i + 1];
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0.0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, distance(p, {a.x + t * vx, a.y + t * vy}));
  }
  return best;
}

std::string fresh_id(const std::unordered_set<std::string> & taken, std::size_t & counter)
{
  std::string id;
  do {
    id = "synthetic_crossing_" + std::to_string(counter++);
  } while (taken.count(id) != 0);
  return id;
}

void strip_successors(std::vector<LaneSegment> & elems, const std::unordered_set<std::string> & removed)
{
  for (auto & e : elems) {
    std::erase_if(e.successors, [&](const std::string & s) { return removed.count(s) != 0; });
  }
}

// Removes crossings from the stale copy. Removed crossings become Inserted.
void remove_crossings(
  const LocalMap & world, const PerturbationConfig & cfg, std::mt19937_64 & rng, SynthesisResult & out)
{
  std::vector<std::size_t> crossings;
  for (std::size_t i = 0; i < world.elements.size(); ++i) {
    if (world.elements[i].element_class == ElementClass::PedestrianCrossing) {
      crossings.push_back(i);
    }
  }

  std::vector<bool> removed(world.elements.size(), false);
  if (cfg.exact_removals) {
    // Partial Fisher-Yates: the first k slots are a uniform k-subset.
    const std::size_t k = std::min(*cfg.exact_removals, crossings.size());
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, crossings.size() - 1);
      std::swap(crossings[i], crossings[pick(rng)]);
      removed[crossings[i]] = true;
    }
  } else {
    std::bernoulli_distribution coin(cfg.deletion_probability);
    for (const std::size_t i : crossings) {
      removed[i] = coin(rng);
    }
  }

  std::unordered_set<std::string> removed_ids;
  out.stale.elements.clear();
  out.gt.elements.clear();
  for (std::size_t i = 0; i < world.elements.size(); ++i) {
    const LaneSegment & e = world.elements[i];
    out.gt.elements.push_back({e, removed[i] ? ChangeLabel::Inserted : ChangeLabel::Unchanged});
    if (removed[i]) {
      removed_ids.insert(e.id);
    } else {
      out.stale.elements.push_back(e);
    }
  }
  strip_successors(out.stale.elements, removed_ids);
}

// Adds `count` synthetic crossings to the stale copy, labeled Deleted.
void add_crossings(
  const LocalMap & world, const PerturbationConfig & cfg, std::size_t count, std::mt19937_64 & rng,
  SynthesisResult & out)
{
  std::vector<const LaneSegment *> hosts;
  std::unordered_set<std::string> taken;
  for (const auto & e : world.elements) {
    taken.insert(e.id);
    if (e.element_class == ElementClass::Lane) {
      hosts.push_back(&e);
    }
  }
  if (hosts.empty()) {
    throw NoHostLane();
  }
  std::size_t counter = 0;
  std::uniform_int_distribution<std::size_t> pick_host(0, hosts.size() - 1);
  std::uniform_real_distribution<double> pick_s(0.0, 1.0);
  for (std::size_t k = 0; k < count; ++k) {
    const std::string id = fresh_id(taken, counter);
    taken.insert(id);
    LaneSegment crossing;
    for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
      const LaneSegment & host = *hosts[pick_host(rng)];
      const double s = pick_s(rng);
      crossing = generate_crossing(host, s, cfg.crossing_length, id);
      if (element_intersects(crossing, world.fov)) {
        break;
      }
    }
    out.stale.elements.push_back(crossing);
    out.gt.elements.push_back({std::move(crossing), ChangeLabel::Deleted});
  }
}

SynthesisResult start_from(const LocalMap & world)
{
  SynthesisResult out;
  out.stale = world;
  out.gt.frame_id = world.frame_id;
  out.gt.fov = world.fov;
  for (const auto & e : world.elements) {
    out.gt.elements.push_back({e, ChangeLabel::Unchanged});
  }
  return out;
}

}  // namespace

std::size_t FrameGroundTruth::count(ChangeLabel label) const
{
  return static_cast<std::size_t>(std::count_if(
    elements.begin(), elements.end(), [label](const LabeledElement & e) { return e.label == label; }));
}

bool FrameGroundTruth::has_change() const
{
  return std::any_of(elements.begin(), elements.end(), [](const LabeledElement & e) {
    return e.label != ChangeLabel::Unchanged;
  });
}

void PerturbationConfig::check() const
{
  if (!(deletion_probability >= 0.0 && deletion_probability <= 1.0)) {
    throw std::invalid_argument("deletion_probability must be in [0, 1]");
  }
  if (!(insertion_rate >= 0.0) || !std::isfinite(insertion_rate)) {
    throw std::invalid_argument("insertion_rate must be >= 0");
  }
  if (!(crossing_length > 0.0) || !std::isfinite(crossing_length)) {
    throw std::invalid_argument("crossing_length must be > 0");
  }
  if (target_ratio && !(*target_ratio > 0.0 && std::isfinite(*target_ratio))) {
    throw std::invalid_argument("target_ratio must be > 0");
  }
}

SynthesisResult make_insertion_examples(const LocalMap & world, const PerturbationConfig & cfg)
{
  cfg.check();
  std::mt19937_64 rng(cfg.rng_seed);
  SynthesisResult out = start_from(world);
  remove_crossings(world, cfg, rng, out);
  return out;
}

SynthesisResult make_deletion_examples(const LocalMap & world, const PerturbationConfig & cfg)
{
  cfg.check();
  std::mt19937_64 rng(cfg.rng_seed);
  const bool has_lane = std::any_of(world.elements.begin(), world.elements.end(), [](const LaneSegment & e) {
    return e.element_class == ElementClass::Lane;
  });
  if (!has_lane) {
    throw NoHostLane();
  }
  SynthesisResult out = start_from(world);
  const std::size_t count = cfg.exact_additions ? *cfg.exact_additions : draw_poisson(rng, cfg.insertion_rate);
  add_crossings(world, cfg, count, rng, out);
  return out;
}

SynthesisResult make_mixed_examples(const LocalMap & world, const PerturbationConfig & cfg)
{
  cfg.check();
  std::mt19937_64 rng(cfg.rng_seed);
  SynthesisResult out = start_from(world);
  remove_crossings(world, cfg, rng, out);

  std::size_t count = 0;
  if (cfg.exact_additions) {
    count = *cfg.exact_additions;
  } else if (cfg.target_ratio) {
    const double removed = static_cast<double>(out.gt.count(ChangeLabel::Inserted));
    count = draw_poisson(rng, removed / *cfg.target_ratio);
  } else {
    count = draw_poisson(rng, cfg.insertion_rate);
  }
  if (count > 0) {
    add_crossings(world, cfg, count, rng, out);
  }
  return out;
}

SynthesisResult perturb(const LocalMap & world, PerturbationMode mode, const PerturbationConfig & cfg)
{
  switch (mode) {
    case PerturbationMode::Insertions:
      return make_insertion_examples(world, cfg);
    case PerturbationMode::Deletions:
      return make_deletion_examples(world, cfg);
    case PerturbationMode::Mixed:
      return make_mixed_examples(world, cfg);
  }
  return make_mixed_examples(world, cfg);
}

LaneSegment make_crossing(
  const Point2 & center, const Point2 & tangent, double left_extent, double right_extent, double length,
  const std::string & id)
{
  const Point2 n{-tangent.y, tangent.x};
  const double half = 0.5 * length;
  const auto at = [&](double along, double across) {
    return Point2{center.x + along * tangent.x + across * n.x, center.y + along * tangent.y + across * n.y};
  };
  // The crossing is walked from the right road edge to the left one, so its
  // own left boundary lies behind the centre along the host tangent.
  LaneSegment seg;
  seg.id = id;
  seg.element_class = ElementClass::PedestrianCrossing;
  seg.centerline = straight_line(at(0.0, -right_extent), at(0.0, left_extent));
  seg.left_boundary = straight_line(at(-half, -right_extent), at(-half, left_extent));
  seg.right_boundary = straight_line(at(half, -right_extent), at(half, left_extent));
  seg.left_type = BoundaryType::NonVisible;
  seg.right_type = BoundaryType::NonVisible;
  return seg;
}

LaneSegment generate_crossing(const LaneSegment & host, double s, double length, const std::string & id)
{
  if (host.element_class != ElementClass::Lane) {
    throw std::invalid_argument("generate_crossing: host must be a lane");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("generate_crossing: length must be > 0");
  }
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("generate_crossing: s must be in [0, 1]");
  }
  const Polyline & c = host.centerline;
  const double total = arclength(c);
  if (!(total > 0.0)) {
    throw ZeroLengthPolyline();
  }
  const double half = 0.5 * length;
  const double target = total >= length ? std::clamp(s * total, half, total - half) : 0.5 * total;

  // Locate the centre and the local tangent.
  double walked = 0.0;
  Point2 center = c.back();
  Point2 tangent{1.0, 0.0};
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const double len = distance(c[i], c[i + 1]);
    if (len <= 0.0) {
      continue;
    }
    tangent = {(c[i + 1].x - c[i].x) / len, (c[i + 1].y - c[i].y) / len};
    if (walked + len >= target) {
      const double t = (target - walked) / len;
      center = {c[i].x + t * (c[i + 1].x - c[i].x), c[i].y + t * (c[i + 1].y - c[i].y)};
      break;
    }
    walked += len;
  }
  const double left = point_to_polyline(center, host.left_boundary);
  const double right = point_to_polyline(center, host.right_boundary);
  return make_crossing(center, tangent, left, right, length, id);
}

}  // namespace mapchange
