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

#ifndef MAPCHANGE__SIMULATOR_HPP_
#define MAPCHANGE__SIMULATOR_HPP_

#include <cstdint>
#include <optional>
#include <random>

#include "mapchange/change_synthesis.hpp"
#include "mapchange/dataset.hpp"
#include "mapchange/parallel.hpp"

namespace mapchange
{

/// Beta(alpha, beta) score distribution, or a fixed score when `constant`
/// is set.
struct ScoreModel
{
  double alpha{8.0};
  double beta{2.0};
  std::optional<double> constant;

  double sample(std::mt19937_64 & rng) const;
};

struct NoiseConfig
{
  /// Probability that a ground-truth element is missing from the output.
  double miss_rate{0.0};
  /// Mean of the Poisson count of spurious elements per frame.
  double clutter_rate{0.0};
  /// Std-dev of the i.i.d. Gaussian added to every coordinate, meters.
  double jitter_sigma{0.0};
  /// Probability that a changed element is reported as unchanged.
  double flag_flip_rate{0.0};
  /// Probability that an unchanged element is reported as changed.
  double false_alarm_rate{0.0};
  /// Probability that a clutter element carries a change flag.
  double clutter_change_prob{0.5};
  ScoreModel score_true{8.0, 2.0, std::nullopt};
  ScoreModel score_clutter{2.0, 8.0, std::nullopt};
  std::uint64_t rng_seed{0};

  /// Perfect detector: reproduces the ground truth with score 1.
  static NoiseConfig identity(std::uint64_t seed = 0);

  void check() const;
};

/// Turns a ground-truth frame into detector output. Deleted elements are
/// emitted with the geometry found in `stale` (matched by id).
FramePrediction simulate_predictions(
  const FrameGroundTruth & gt, const LocalMap & stale, const NoiseConfig & cfg);

/// Procedural road world: a (possibly curved) multi-lane road along x with
/// crossings spanning its full width.
struct WorldParams
{
  std::size_t lanes{3};
  double lane_width{3.5};
  double segment_length{25.0};
  /// Lateral amplitude of the road's sinusoidal centre curve is drawn from
  /// [0, max_amplitude].
  double max_amplitude{4.0};
  std::size_t crossings{3};
  double crossing_length{4.0};
};

/// World along x in [x_begin, x_end], in sequence coordinates.
LocalMap generate_world(
  const WorldParams & params, double x_begin, double x_end, std::uint64_t seed,
  const std::string & id_prefix = "");

struct DatasetSpec
{
  std::size_t n_sequences{1};
  std::size_t frames_per_sequence{1};
  WorldParams world;
  PerturbationMode mode{PerturbationMode::Mixed};
  PerturbationConfig perturbation;
  NoiseConfig noise;
  /// Ego advance per frame along the road, meters.
  double frame_step{2.0};
  std::uint64_t seed{0};
};

Dataset build_synthetic_dataset(const DatasetSpec & spec, ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// 33 change sequences + 4 no-change sequences, 46 crossing deletions and 20
/// crossing insertions, 3800 frames in total.
Dataset build_paper_stats_dataset(
  const NoiseConfig & noise, std::uint64_t seed = 0, ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// splitmix64-based stream split so every frame has its own seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace mapchange

#endif  // MAPCHANGE__SIMULATOR_HPP_
