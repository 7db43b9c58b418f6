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

#ifndef MAPCHANGE__CHANGE_SYNTHESIS_HPP_
#define MAPCHANGE__CHANGE_SYNTHESIS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mapchange/types.hpp"

namespace mapchange
{

struct LabeledElement
{
  LaneSegment element;
  ChangeLabel label{ChangeLabel::Unchanged};

  friend bool operator==(const LabeledElement &, const LabeledElement &) = default;
};

/// Ground truth for one frame. Deleted elements keep the geometry they had
/// in the stale map.
struct FrameGroundTruth
{
  std::string frame_id;
  Fov fov;
  std::vector<LabeledElement> elements;

  std::size_t m_gt() const { return elements.size(); }
  std::size_t count(ChangeLabel label) const;
  bool has_change() const;

  friend bool operator==(const FrameGroundTruth &, const FrameGroundTruth &) = default;
};

struct PerturbationConfig
{
  /// Probability that each crossing is removed from the stale copy.
  double deletion_probability{0.0};
  /// Mean of the Poisson count of synthetic crossings added to the stale copy.
  double insertion_rate{0.0};
  double crossing_length{3.5};
  std::uint64_t rng_seed{0};
  /// Desired insertion:deletion ratio for mixed mode. When set, the expected
  /// synthetic crossing count becomes removed / target_ratio.
  std::optional<double> target_ratio;
  /// Exact number of crossings to remove (overrides deletion_probability).
  std::optional<std::size_t> exact_removals;
  /// Exact number of synthetic crossings to add (overrides insertion_rate).
  std::optional<std::size_t> exact_additions;

  /// Throws std::invalid_argument on out-of-range fields.
  void check() const;
};

struct SynthesisResult
{
  LocalMap stale;
  FrameGroundTruth gt;
};

enum class PerturbationMode : std::uint8_t { Insertions, Deletions, Mixed };

/// Removes crossings from the stale copy; removed crossings are labeled
/// Inserted in the ground truth (the world gained them). Lanes are never
/// touched.
SynthesisResult make_insertion_examples(const LocalMap & world, const PerturbationConfig & cfg);

/// Adds synthetic crossings on random host lanes to the stale copy only; the
/// ground truth carries them as Deleted. Throws NoHostLane when a crossing
/// must be placed and the world has no lanes.
SynthesisResult make_deletion_examples(const LocalMap & world, const PerturbationConfig & cfg);

/// Both directions from one seed: removal first, then synthetic additions.
SynthesisResult make_mixed_examples(const LocalMap & world, const PerturbationConfig & cfg);

SynthesisResult perturb(const LocalMap & world, PerturbationMode mode, const PerturbationConfig & cfg);

/// Builds a crossing on `host` centred at arclength fraction `s` of the host
/// centerline, spanning the host's boundary-to-boundary width and `length`
/// meters along the centerline tangent. The centre is clamped so the crossing
/// stays within the host's extent.
LaneSegment generate_crossing(const LaneSegment & host, double s, double length, const std::string & id);

/// Crossing quadrilateral given explicitly: centre, unit tangent, extents to
/// the left and right of the centre (along the left normal) and the length
/// along the tangent. Polylines are canonical 10-point.
LaneSegment make_crossing(
  const Point2 & center, const Point2 & tangent, double left_extent, double right_extent,
  double length, const std::string & id);

}  // namespace mapchange

#endif  // MAPCHANGE__CHANGE_SYNTHESIS_HPP_
