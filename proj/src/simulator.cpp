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

#include "mapchange/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mapchange/geometry.hpp"
#include "mapchange/map_model.hpp"

namespace mapchange
{

namespace
{

constexpr double kClutterMinOffset = 5.0;
constexpr double kClutterMaxOffset = 10.0;
constexpr std::size_t kDenseSamples = 50;
const Fov kFrameFov{-25.0, -25.0, 25.0, 25.0};

std::uint64_t splitmix(std::uint64_t z)
{
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_rate(double v, const char * name)
{
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string("NoiseConfig: ") + name + " must be in [0, 1]");
  }
}

void check_score(const ScoreModel & m, const char * name)
{
  if (m.constant) {
    if (!(*m.constant >= 0.0 && *m.constant <= 1.0)) {
      throw std::invalid_argument(std::string("NoiseConfig: ") + name + ".constant must be in [0, 1]");
    }
    return;
  }
  if (!(m.alpha > 0.0) || !(m.beta > 0.0) || !std::isfinite(m.alpha) || !std::isfinite(m.beta)) {
    throw std::invalid_argument(std::string("NoiseConfig: ") + name + " Beta parameters must be > 0");
  }
}

void jitter(LaneSegment & seg, double sigma, std::mt19937_64 & rng)
{
  if (!(sigma > 0.0)) {
    return;
  }
  std::normal_distribution<double> noise(0.0, sigma);
  for (Polyline * line : {&seg.centerline, &seg.left_boundary, &seg.right_boundary}) {
    for (auto & p : *line) {
      p.x += noise(rng);
      p.y += noise(rng);
    }
  }
}

void translate(LaneSegment & seg, double dx, double dy)
{
  for (Polyline * line : {&seg.centerline, &seg.left_boundary, &seg.right_boundary}) {
    for (auto & p : *line) {
      p.x += dx;
      p.y += dy;
    }
  }
}

// Sinusoidal road centre curve y(x) = a * sin(2*pi*x / period + phase).
struct RoadCurve
{
  double amplitude{0.0};
  double period{200.0};
  double phase{0.0};

  double y(double x) const { return amplitude * std::sin(2.0 * std::numbers::pi * x / period + phase); }
  double slope(double x) const
  {
    return amplitude * (2.0 * std::numbers::pi / period) * std::cos(2.0 * std::numbers::pi * x / period + phase);
  }
  double heading(double x) const { return std::atan(slope(x)); }

  Point2 at(double x, double offset) const
  {
    const double h = heading(x);
    return {x - offset * std::sin(h), y(x) + offset * std::cos(h)};
  }
};

Polyline offset_line(const RoadCurve & road, double x0, double x1, double offset)
{
  Polyline dense;
  dense.reserve(kDenseSamples);
  for (std::size_t i = 0; i < kDenseSamples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(kDenseSamples - 1);
    dense.push_back(road.at(x0 + t * (x1 - x0), offset));
  }
  return resample_polyline(dense, kCanonicalPoints);
}

struct RoadWorld
{
  RoadCurve road;
  LocalMap map;
};

RoadWorld make_world(
  const WorldParams & params, double x_begin, double x_end, std::uint64_t seed, const std::string & prefix)
{
  if (params.lanes == 0 || !(params.lane_width > 0.0) || !(params.segment_length > 0.0) || !(x_end > x_begin)) {
    throw std::invalid_argument("generate_world: invalid parameters");
  }
  std::mt19937_64 rng(seed);
  RoadWorld w;
  std::uniform_real_distribution<double> amp(0.0, std::max(0.0, params.max_amplitude));
  std::uniform_real_distribution<double> period(150.0, 300.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  w.road.amplitude = amp(rng);
  w.road.period = period(rng);
  w.road.phase = phase(rng);

  const double half_road = 0.5 * static_cast<double>(params.lanes) * params.lane_width;
  w.map.frame_id = prefix.empty() ? "world" : prefix + "world";
  const double margin = w.road.amplitude + half_road + 10.0;
  w.map.fov = {x_begin, -margin, x_end, margin};

  const auto n_segments =
    static_cast<std::size_t>(std::max(1.0, std::ceil((x_end - x_begin) / params.segment_length)));
  const double seg_len = (x_end - x_begin) / static_cast<double>(n_segments);
  for (std::size_t j = 0; j < params.lanes; ++j) {
    const double center = (static_cast<double>(j) - 0.5 * static_cast<double>(params.lanes - 1)) * params.lane_width;
    for (std::size_t i = 0; i < n_segments; ++i) {
      const double a = x_begin + static_cast<double>(i) * seg_len;
      const double b = i + 1 == n_segments ? x_end : a + seg_len;
      LaneSegment seg;
      seg.id = prefix + "lane_" + std::to_string(j) + "_" + std::to_string(i);
      seg.element_class = ElementClass::Lane;
      seg.centerline = offset_line(w.road, a, b, center);
      seg.left_boundary = offset_line(w.road, a, b, center + 0.5 * params.lane_width);
      seg.right_boundary = offset_line(w.road, a, b, center - 0.5 * params.lane_width);
      seg.left_type = j + 1 == params.lanes ? BoundaryType::Solid : BoundaryType::Dashed;
      seg.right_type = j == 0 ? BoundaryType::Solid : BoundaryType::Dashed;
      if (i + 1 < n_segments) {
        seg.successors.push_back(prefix + "lane_" + std::to_string(j) + "_" + std::to_string(i + 1));
      }
      w.map.elements.push_back(std::move(seg));
    }
  }

  // Crossings span the whole road, one per equal-width bin along x.
  const double lo = x_begin + 10.0;
  const double hi = x_end - 10.0;
  if (params.crossings > 0 && hi > lo) {
    const double bin = (hi - lo) / static_cast<double>(params.crossings);
    std::uniform_real_distribution<double> within(0.2, 0.8);
    for (std::size_t c = 0; c < params.crossings; ++c) {
      const double x = lo + (static_cast<double>(c) + within(rng)) * bin;
      const double h = w.road.heading(x);
      w.map.elements.push_back(make_crossing(
        w.road.at(x, 0.0), {std::cos(h), std::sin(h)}, half_road, half_road, params.crossing_length,
        prefix + "crossing_" + std::to_string(c)));
    }
  }
  return w;
}

std::string sequence_id(std::size_t i)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "seq_%03zu", i);
  return buf;
}

std::string frame_id(const std::string & seq, std::size_t j)
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "_f%04zu", j);
  return seq + buf;
}

void strip_missing_successors(std::vector<LaneSegment *> & elems)
{
  std::unordered_set<std::string> present;
  for (const auto * e : elems) {
    present.insert(e->id);
  }
  for (auto * e : elems) {
    std::erase_if(e->successors, [&](const std::string & s) { return present.count(s) == 0; });
  }
}

struct SequencePlan
{
  std::string id;
  std::size_t frames{1};
  RoadWorld world;
  SynthesisResult changes;
};

FrameRecord make_frame(const SequencePlan & plan, std::size_t j, double step, const NoiseConfig & noise, std::size_t seq)
{
  const double x = static_cast<double>(j) * step;
  const RigidTransform into = RigidTransform::into_frame(plan.world.road.at(x, 0.0), plan.world.road.heading(x));
  FrameRecord f;
  const std::string fid = frame_id(plan.id, j);

  f.stale.frame_id = fid;
  f.stale.fov = kFrameFov;
  for (const auto & e : plan.changes.stale.elements) {
    LaneSegment local = into.apply(e);
    if (element_intersects(local, kFrameFov)) {
      f.stale.elements.push_back(std::move(local));
    }
  }
  f.ground_truth.frame_id = fid;
  f.ground_truth.fov = kFrameFov;
  for (const auto & e : plan.changes.gt.elements) {
    LaneSegment local = into.apply(e.element);
    if (element_intersects(local, kFrameFov)) {
      f.ground_truth.elements.push_back({std::move(local), e.label});
    }
  }
  {
    std::vector<LaneSegment *> ptrs;
    for (auto & e : f.stale.elements) {
      ptrs.push_back(&e);
    }
    strip_missing_successors(ptrs);
    ptrs.clear();
    for (auto & e : f.ground_truth.elements) {
      ptrs.push_back(&e.element);
    }
    strip_missing_successors(ptrs);
  }

  NoiseConfig frame_noise = noise;
  frame_noise.rng_seed = derive_seed(noise.rng_seed, seq, j);
  f.prediction = simulate_predictions(f.ground_truth, f.stale, frame_noise);
  return f;
}

Dataset assemble(std::vector<SequencePlan> & plans, double step, const NoiseConfig & noise, ExecutionPolicy policy)
{
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  Dataset ds;
  ds.sequences.resize(plans.size());
  for (std::size_t s = 0; s < plans.size(); ++s) {
    ds.sequences[s].id = plans[s].id;
    ds.sequences[s].frames.resize(plans[s].frames);
    for (std::size_t j = 0; j < plans[s].frames; ++j) {
      jobs.emplace_back(s, j);
    }
  }
  const auto run = [&](std::size_t k) {
    const auto [s, j] = jobs[k];
    ds.sequences[s].frames[j] = make_frame(plans[s], j, step, noise, s);
  };
  if (policy == ExecutionPolicy::Parallel) {
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      run(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      run(k);
    }
  }
  return ds;
}

SynthesisResult unchanged(const LocalMap & world)
{
  SynthesisResult r;
  r.stale = world;
  r.gt.frame_id = world.frame_id;
  r.gt.fov = world.fov;
  for (const auto & e : world.elements) {
    r.gt.elements.push_back({e, ChangeLabel::Unchanged});
  }
  return r;
}

}  // namespace

double ScoreModel::sample(std::mt19937_64 & rng) const
{
  if (constant) {
    return *constant;
  }
  std::gamma_distribution<double> ga(alpha, 1.0);
  std::gamma_distribution<double> gb(beta, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  const double sum = x + y;
  return sum > 0.0 ? x / sum : 0.5;
}

NoiseConfig NoiseConfig::identity(std::uint64_t seed)
{
  NoiseConfig cfg;
  cfg.score_true.constant = 1.0;
  cfg.score_clutter.constant = 0.0;
  cfg.rng_seed = seed;
  return cfg;
}

void NoiseConfig::check() const
{
  check_rate(miss_rate, "miss_rate");
  check_rate(flag_flip_rate, "flag_flip_rate");
  check_rate(false_alarm_rate, "false_alarm_rate");
  check_rate(clutter_change_prob, "clutter_change_prob");
  if (!(clutter_rate >= 0.0) || !std::isfinite(clutter_rate)) {
    throw std::invalid_argument("NoiseConfig: clutter_rate must be >= 0");
  }
  if (!(jitter_sigma >= 0.0) || !std::isfinite(jitter_sigma)) {
    throw std::invalid_argument("NoiseConfig: jitter_sigma must be >= 0");
  }
  check_score(score_true, "score_true");
  check_score(score_clutter, "score_clutter");
}

FramePrediction simulate_predictions(const FrameGroundTruth & gt, const LocalMap & stale, const NoiseConfig & cfg)
{
  cfg.check();
  std::mt19937_64 rng(cfg.rng_seed);
  std::unordered_map<std::string, const LaneSegment *> stale_by_id;
  for (const auto & e : stale.elements) {
    stale_by_id.emplace(e.id, &e);
  }

  FramePrediction out;
  out.frame_id = gt.frame_id;
  std::bernoulli_distribution miss(cfg.miss_rate);
  std::bernoulli_distribution flip(cfg.flag_flip_rate);
  std::bernoulli_distribution false_alarm(cfg.false_alarm_rate);
  for (const auto & g : gt.elements) {
    if (miss(rng)) {
      continue;
    }
    PredictedElement p;
    p.geometry = g.element;
    if (g.label == ChangeLabel::Deleted) {
      if (const auto it = stale_by_id.find(g.element.id); it != stale_by_id.end()) {
        p.geometry = *it->second;
      }
    }
    jitter(p.geometry, cfg.jitter_sigma, rng);
    if (g.label == ChangeLabel::Unchanged) {
      if (false_alarm(rng)) {
        p.del_prob = 1.0;
      }
    } else if (!flip(rng)) {
      (g.label == ChangeLabel::Inserted ? p.ins_prob : p.del_prob) = 1.0;
    }
    p.score = cfg.score_true.sample(rng);
    out.elements.push_back(std::move(p));
  }

  std::poisson_distribution<std::size_t> clutter_count(cfg.clutter_rate > 0.0 ? cfg.clutter_rate : 1.0);
  const std::size_t n_clutter = cfg.clutter_rate > 0.0 ? clutter_count(rng) : 0;
  if (n_clutter > 0 && !gt.elements.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, gt.elements.size() - 1);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> offset(kClutterMinOffset, kClutterMaxOffset);
    std::bernoulli_distribution changed(cfg.clutter_change_prob);
    std::bernoulli_distribution insertion(0.5);
    for (std::size_t k = 0; k < n_clutter; ++k) {
      PredictedElement p;
      p.geometry = gt.elements[pick(rng)].element;
      p.geometry.id = "clutter_" + std::to_string(k);
      p.geometry.successors.clear();
      const double a = angle(rng);
      const double d = offset(rng);
      translate(p.geometry, d * std::cos(a), d * std::sin(a));
      jitter(p.geometry, cfg.jitter_sigma, rng);
      if (changed(rng)) {
        (insertion(rng) ? p.ins_prob : p.del_prob) = 1.0;
      }
      p.score = cfg.score_clutter.sample(rng);
      out.elements.push_back(std::move(p));
    }
  }
  return out;
}

LocalMap generate_world(
  const WorldParams & params, double x_begin, double x_end, std::uint64_t seed, const std::string & id_prefix)
{
  return make_world(params, x_begin, x_end, seed, id_prefix).map;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b)
{
  return splitmix(splitmix(splitmix(base) ^ a) ^ b);
}

Dataset build_synthetic_dataset(const DatasetSpec & spec, ExecutionPolicy policy)
{
  if (spec.n_sequences == 0 || spec.frames_per_sequence == 0) {
    throw std::invalid_argument("build_synthetic_dataset: counts must be >= 1");
  }
  if (!(spec.frame_step > 0.0)) {
    throw std::invalid_argument("build_synthetic_dataset: frame_step must be > 0");
  }
  spec.perturbation.check();
  spec.noise.check();
  const double driven = static_cast<double>(spec.frames_per_sequence - 1) * spec.frame_step;
  std::vector<SequencePlan> plans(spec.n_sequences);
  for (std::size_t s = 0; s < spec.n_sequences; ++s) {
    auto & plan = plans[s];
    plan.id = sequence_id(s);
    plan.frames = spec.frames_per_sequence;
    plan.world = make_world(spec.world, -25.0, driven + 25.0, derive_seed(spec.seed, s, 1), "");
    PerturbationConfig cfg = spec.perturbation;
    cfg.rng_seed = derive_seed(spec.perturbation.rng_seed ^ spec.seed, s, 2);
    plan.changes = perturb(plan.world.map, spec.mode, cfg);
  }
  return assemble(plans, spec.frame_step, spec.noise, policy);
}

Dataset build_paper_stats_dataset(const NoiseConfig & noise, std::uint64_t seed, ExecutionPolicy policy)
{
  // 37 sequences: 0-32 carry changes, 33-36 do not. Insertions go to 0-19,
  // one deletion to every change sequence and a second one to 20-32.
  constexpr std::size_t kSequences = 37;
  constexpr std::size_t kChangeSequences = 33;
  constexpr std::size_t kInsertionSequences = 20;
  constexpr std::size_t kLongSequences = 26;  // 26 * 103 + 11 * 102 = 3800
  constexpr double kStep = 2.0;
  noise.check();

  WorldParams params;
  std::vector<SequencePlan> plans(kSequences);
  for (std::size_t s = 0; s < kSequences; ++s) {
    auto & plan = plans[s];
    plan.id = sequence_id(s);
    plan.frames = s < kLongSequences ? 103 : 102;
    const double driven = static_cast<double>(plan.frames - 1) * kStep;
    plan.world = make_world(params, -25.0, driven + 25.0, derive_seed(seed, s, 1), "");
    if (s < kChangeSequences) {
      PerturbationConfig cfg;
      cfg.rng_seed = derive_seed(seed, s, 2);
      cfg.exact_removals = s < kInsertionSequences ? 1 : 0;
      cfg.exact_additions = s < kInsertionSequences ? 1 : 2;
      plan.changes = make_mixed_examples(plan.world.map, cfg);
    } else {
      plan.changes = unchanged(plan.world.map);
    }
  }
  return assemble(plans, kStep, noise, policy);
}

}  // namespace mapchange
