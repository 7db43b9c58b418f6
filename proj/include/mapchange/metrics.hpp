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

#ifndef MAPCHANGE__METRICS_HPP_
#define MAPCHANGE__METRICS_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapchange/dataset.hpp"
#include "mapchange/parallel.hpp"

namespace mapchange
{

/// hits / total with an explicit undefined state for total == 0.
struct Ratio
{
  std::size_t hits{0};
  std::size_t total{0};

  std::optional<double> value() const;
  Ratio & operator+=(const Ratio & other);

  friend bool operator==(const Ratio &, const Ratio &) = default;
};

/// Acc+ over change units, Acc- over no-change units, mAcc their mean.
struct ChangeAccuracy
{
  Ratio positive;
  Ratio negative;

  std::optional<double> acc_pos() const { return positive.value(); }
  std::optional<double> acc_neg() const { return negative.value(); }
  /// Undefined if either side is undefined.
  std::optional<double> macc() const;
};

struct EvalConfig
{
  std::vector<double> epsilons{0.2, 0.3, 0.4};
  std::vector<double> thetas{0.3, 0.5, 0.8};
  std::vector<double> lane_thresholds{1.0, 2.0, 3.0};
  std::vector<double> crossing_thresholds{0.5, 1.0, 1.5};
  double iou_resolution{0.1};
  /// Score gate used by the localization strategies.
  double localization_epsilon{0.3};
  /// Localize only against ground truth of the same element class.
  bool localization_class_gate{true};
  /// Use the crossing threshold set for lane change AP.
  bool change_ap_lane_uses_crossing_thresholds{false};
  /// Exclude del-flagged predictions and Deleted ground truth from the
  /// updated-map AP.
  bool updated_map_drop_deletions{false};

  /// Throws std::invalid_argument when a list is empty, unsorted or out of
  /// range.
  void check() const;
  const std::vector<double> & thresholds_for(ElementClass cls) const;
};

/// Frame verdict: 1 iff some element carries the filtered flag with
/// score >= epsilon.
bool sf_frame_verdict(const FramePrediction & frame, double epsilon, ChangeFilter filter = ChangeFilter::Any);

/// Sequence verdict: OR of the frame verdicts.
bool mf_sequence_verdict(const Sequence & seq, double epsilon, ChangeFilter filter = ChangeFilter::Any);

ChangeAccuracy sf_change_accuracy(
  const Dataset & ds, double epsilon, ChangeFilter filter = ChangeFilter::Any,
  ExecutionPolicy policy = ExecutionPolicy::Parallel);

ChangeAccuracy mf_change_accuracy(
  const Dataset & ds, double epsilon, ChangeFilter filter = ChangeFilter::Any,
  ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct LocalizationOptions
{
  double epsilon{0.3};
  double theta{0.5};
  ChangeFilter filter{ChangeFilter::Any};
  /// Count only detections in frames with >= 1 ground-truth change (Acc_loca^c).
  bool changed_frames_only{false};
  bool class_gate{true};
  double resolution{0.1};
};

/// Localized detections over detections. A detection is a prediction with
/// the filtered flag and score >= epsilon; it is localized when its IoU with
/// a ground-truth change of a compatible direction reaches theta.
Ratio localization_accuracy(
  const Dataset & ds, const LocalizationOptions & opts,
  ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// All-point interpolated average precision of a score-ranked list of
/// detections flagged true/false positive.
double average_precision(std::span<const bool> ranked_true_positive, std::size_t num_gt);

struct ApResult
{
  /// Mean over thresholds; nullopt when there is no ground truth.
  std::optional<double> ap;
  std::vector<double> per_threshold;
  std::size_t num_gt{0};
  std::size_t num_pred{0};
};

struct ClassAp
{
  ApResult lane;
  ApResult crossing;

  const ApResult & operator[](ElementClass cls) const
  {
    return cls == ElementClass::Lane ? lane : crossing;
  }
};

/// Selects which predictions and ground-truth elements enter an AP run.
struct ApPopulation
{
  /// Only predictions flagged under this filter; nullopt = all predictions.
  std::optional<ChangeFilter> pred_filter;
  /// Only ground truth whose label is a change under this filter;
  /// nullopt = all ground truth.
  std::optional<ChangeFilter> gt_filter;
  bool drop_deleted{false};
};

/// Ranked-greedy AP for one class: predictions sorted by score (ties by
/// dataset order), each taking the nearest unconsumed ground truth in its
/// frame within the threshold. Averaged over `thresholds`.
ApResult ranked_greedy_ap(
  const Dataset & ds, const ApPopulation & population, ElementClass cls,
  std::span<const double> thresholds, ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// AP of elements flagged as changed against ground-truth changes.
ClassAp changed_element_ap(
  const Dataset & ds, ChangeFilter filter, const EvalConfig & cfg,
  ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// AP of the full predicted map against the full ground-truth map.
ClassAp updated_map_ap(
  const Dataset & ds, const EvalConfig & cfg, ExecutionPolicy policy = ExecutionPolicy::Parallel);

// --- report ------------------------------------------------------------------

struct MetricValue
{
  std::string name;
  std::optional<double> value;
  /// Set when value is undefined.
  std::string reason;
  std::optional<std::size_t> numerator;
  std::optional<std::size_t> denominator;
};

struct ReportRow
{
  std::string change_class;
  std::string parameter_name;
  std::optional<double> parameter;
  std::string object_type;
  std::vector<MetricValue> values;
  /// Matching procedure behind the numbers, when one is involved.
  std::string method;
};

struct StrategyBlock
{
  std::string key;
  std::string modality;
  std::string description;
  std::vector<ReportRow> rows;
  std::string error;
};

struct FrameAudit
{
  std::string sequence_id;
  std::string frame_id;
  bool gt_change{false};
  bool gt_insertion{false};
  bool gt_deletion{false};
  /// SF type-agnostic verdict per configured epsilon.
  std::vector<bool> verdicts;
  std::size_t hungarian_matched{0};
  std::size_t unmatched_preds{0};
  std::size_t unmatched_gts{0};
};

/// Hungarian attribution of ground-truth labels (rows) to predicted change
/// status (columns), both indexed Unchanged/Inserted/Deleted, plus the
/// elements left unmatched.
struct Attribution
{
  std::array<std::array<std::size_t, 3>, 3> confusion{};
  std::array<std::size_t, 3> unmatched_gt{};
  std::array<std::size_t, 3> unmatched_pred{};
};

struct EvalReport
{
  EvalConfig config;
  std::size_t sequences{0};
  std::size_t frames{0};
  std::vector<StrategyBlock> strategies;
  std::vector<FrameAudit> frame_audit;
  Attribution attribution;
};

/// Runs strategies (a) through (i) over the full parameter grid. A failing
/// strategy records its error in its block; the others still run.
EvalReport evaluate_all(
  const Dataset & ds, const EvalConfig & cfg = {},
  ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Predicted change status, Inserted when the insertion flag is set.
ChangeLabel predicted_status(const PredictedElement & e);

}  // namespace mapchange

#endif  // MAPCHANGE__METRICS_HPP_
