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

#ifndef MAPCHANGE__DATASET_HPP_
#define MAPCHANGE__DATASET_HPP_

#include <string>
#include <vector>

#include "mapchange/change_synthesis.hpp"
#include "mapchange/types.hpp"

namespace mapchange
{

/// Head probabilities are binarized at this cut.
inline constexpr double kFlagCut = 0.5;

/// One output of the change-aware detector.
struct PredictedElement
{
  LaneSegment geometry;
  /// Element-existence confidence.
  double score{1.0};
  double ins_prob{0.0};
  double del_prob{0.0};

  bool ins_flag() const { return ins_prob >= kFlagCut; }
  bool del_flag() const { return del_prob >= kFlagCut; }
  bool changed() const { return ins_flag() || del_flag(); }

  friend bool operator==(const PredictedElement &, const PredictedElement &) = default;
};

struct FramePrediction
{
  std::string frame_id;
  std::vector<PredictedElement> elements;

  std::size_t m_pred() const { return elements.size(); }

  friend bool operator==(const FramePrediction &, const FramePrediction &) = default;
};

struct FrameRecord
{
  FramePrediction prediction;
  FrameGroundTruth ground_truth;
  LocalMap stale;

  friend bool operator==(const FrameRecord &, const FrameRecord &) = default;
};

struct Sequence
{
  std::string id;
  std::vector<FrameRecord> frames;

  /// y^MF: any frame has a ground-truth change.
  bool has_change() const;

  friend bool operator==(const Sequence &, const Sequence &) = default;
};

struct Dataset
{
  std::vector<Sequence> sequences;

  std::size_t frame_count() const;

  /// Throws DataError when prediction and ground-truth frame ids disagree.
  void check_alignment() const;

  friend bool operator==(const Dataset &, const Dataset &) = default;
};

/// Change-type filter shared by verdicts, localization and AP.
enum class ChangeFilter : std::uint8_t { Any, Insertion, Deletion };

std::string_view to_string(ChangeFilter filter);

/// Whether a predicted element carries the flag selected by `filter`.
bool flagged(const PredictedElement & e, ChangeFilter filter);

/// Whether a ground-truth label counts as a change under `filter`.
bool is_change(ChangeLabel label, ChangeFilter filter);

/// Ground-truth frame verdict y^SF under `filter`.
bool frame_has_change(const FrameGroundTruth & gt, ChangeFilter filter);

}  // namespace mapchange

#endif  // MAPCHANGE__DATASET_HPP_
