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

#include "mapchange/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "mapchange/errors.hpp"
#include "mapchange/geometry.hpp"
#include "mapchange/matching.hpp"

namespace mapchange
{

namespace
{

struct FrameRef
{
  std::size_t seq;
  const FrameRecord * frame;
};

std::vector<FrameRef> flatten(const Dataset & ds)
{
  std::vector<FrameRef> out;
  out.reserve(ds.frame_count());
  for (std::size_t s = 0; s < ds.sequences.size(); ++s) {
    for (const auto & f : ds.sequences[s].frames) {
      out.push_back({s, &f});
    }
  }
  return out;
}

// Evaluates fn(i) for i in [0, n) into a vector, in parallel when asked.
// Results are stored by index so reductions stay order-independent.
template <typename T, typename Fn>
std::vector<T> map_indices(std::size_t n, ExecutionPolicy policy, Fn && fn)
{
  std::vector<T> out(n);
  if (policy == ExecutionPolicy::Parallel) {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = fn(i);
    }
  }
  return out;
}

void check_list(const std::vector<double> & v, const char * name, double lo, double hi, bool open_hi)
{
  if (v.empty()) {
    throw std::invalid_argument(std::string("EvalConfig: ") + name + " must not be empty");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool in_range = v[i] > lo && (open_hi ? v[i] < hi : v[i] <= hi);
    if (!in_range || !std::isfinite(v[i])) {
      throw std::invalid_argument(std::string("EvalConfig: ") + name + " value out of range");
    }
    if (i > 0 && !(v[i - 1] < v[i])) {
      throw std::invalid_argument(std::string("EvalConfig: ") + name + " must be ascending");
    }
  }
}

bool boxes_overlap(const Polygon & a, const Polygon & b)
{
  const auto bounds = [](const Polygon & p) {
    std::array<double, 4> bb{
      std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
      -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto & q : p.ring) {
      bb[0] = std::min(bb[0], q.x);
      bb[1] = std::min(bb[1], q.y);
      bb[2] = std::max(bb[2], q.x);
      bb[3] = std::max(bb[3], q.y);
    }
    return bb;
  };
  const auto ba = bounds(a);
  const auto bb = bounds(b);
  return ba[0] <= bb[2] && bb[0] <= ba[2] && ba[1] <= bb[3] && bb[1] <= ba[3];
}

bool direction_compatible(const PredictedElement & p, ChangeLabel label)
{
  return (p.ins_flag() && label == ChangeLabel::Inserted) || (p.del_flag() && label == ChangeLabel::Deleted);
}

struct GtChange
{
  Polygon polygon;
  ChangeLabel label;
  ElementClass cls;
};

Ratio localize_frame(const FrameRecord & f, const LocalizationOptions & opts, ExecutionPolicy iou_policy)
{
  Ratio r;
  if (opts.changed_frames_only && !frame_has_change(f.ground_truth, opts.filter)) {
    return r;
  }
  std::vector<GtChange> changes;
  for (const auto & g : f.ground_truth.elements) {
    if (!is_change(g.label, opts.filter)) {
      continue;
    }
    try {
      changes.push_back({element_polygon(g.element), g.label, g.element.element_class});
    } catch (const DegenerateElement &) {
      // Cannot be localized against.
    }
  }
  for (const auto & p : f.prediction.elements) {
    if (!flagged(p, opts.filter) || p.score < opts.epsilon) {
      continue;
    }
    ++r.total;
    Polygon poly;
    try {
      poly = element_polygon(p.geometry);
    } catch (const DegenerateElement &) {
      continue;
    }
    for (const auto & g : changes) {
      if (!direction_compatible(p, g.label)) {
        continue;
      }
      if (opts.class_gate && g.cls != p.geometry.element_class) {
        continue;
      }
      if (!boxes_overlap(poly, g.polygon)) {
        continue;
      }
      if (polygon_iou(poly, g.polygon, opts.resolution, iou_policy) >= opts.theta) {
        ++r.hits;
        break;
      }
    }
  }
  return r;
}

// Per-frame AP inputs: candidate predictions (sorted best first) and the
// distances to the frame's ground truth of the same population.
struct ApFrame
{
  std::vector<std::size_t> preds;  // indices into prediction.elements
  std::vector<double> scores;
  std::size_t num_gt{0};
  std::vector<double> dist;  // preds.size() x num_gt
};

ApFrame collect_ap_frame(const FrameRecord & f, const ApPopulation & pop, ElementClass cls)
{
  ApFrame out;
  std::vector<const LaneSegment *> gts;
  for (const auto & g : f.ground_truth.elements) {
    if (g.element.element_class != cls) {
      continue;
    }
    if (pop.gt_filter && !is_change(g.label, *pop.gt_filter)) {
      continue;
    }
    if (pop.drop_deleted && g.label == ChangeLabel::Deleted) {
      continue;
    }
    gts.push_back(&g.element);
  }
  const auto & elems = f.prediction.elements;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto & p = elems[i];
    if (p.geometry.element_class != cls) {
      continue;
    }
    if (pop.pred_filter && !flagged(p, *pop.pred_filter)) {
      continue;
    }
    if (pop.drop_deleted && p.del_flag()) {
      continue;
    }
    out.preds.push_back(i);
  }
  std::stable_sort(out.preds.begin(), out.preds.end(), [&](std::size_t a, std::size_t b) {
    return elems[a].score > elems[b].score;
  });
  out.num_gt = gts.size();
  out.scores.reserve(out.preds.size());
  out.dist.resize(out.preds.size() * gts.size());
  for (std::size_t r = 0; r < out.preds.size(); ++r) {
    const auto & p = elems[out.preds[r]];
    out.scores.push_back(p.score);
    for (std::size_t c = 0; c < gts.size(); ++c) {
      out.dist[r * gts.size() + c] = segment_distance(p.geometry, *gts[c]);
    }
  }
  return out;
}

std::vector<bool> greedy_true_positives(const ApFrame & f, double threshold)
{
  std::vector<bool> tp(f.preds.size(), false);
  std::vector<bool> consumed(f.num_gt, false);
  for (std::size_t r = 0; r < f.preds.size(); ++r) {
    std::size_t best = f.num_gt;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < f.num_gt; ++c) {
      const double d = f.dist[r * f.num_gt + c];
      if (!consumed[c] && d <= threshold && d < best_d) {
        best = c;
        best_d = d;
      }
    }
    if (best < f.num_gt) {
      consumed[best] = true;
      tp[r] = true;
    }
  }
  return tp;
}

MetricValue ratio_value(const std::string & name, const Ratio & r, const std::string & undefined_reason)
{
  MetricValue v;
  v.name = name;
  v.value = r.value();
  v.numerator = r.hits;
  v.denominator = r.total;
  if (!v.value) {
    v.reason = undefined_reason;
  }
  return v;
}

MetricValue optional_value(const std::string & name, std::optional<double> value, const std::string & reason)
{
  MetricValue v;
  v.name = name;
  v.value = value;
  if (!value) {
    v.reason = reason;
  }
  return v;
}

std::vector<MetricValue> accuracy_values(const ChangeAccuracy & acc, bool sequences)
{
  const std::string unit = sequences ? "sequences" : "frames";
  return {
    ratio_value("acc_pos", acc.positive, "no change " + unit),
    ratio_value("acc_neg", acc.negative, "no no-change " + unit),
    optional_value("macc", acc.macc(), "acc_pos or acc_neg undefined"),
  };
}

MetricValue ap_value(const ApResult & r)
{
  MetricValue v = optional_value("ap", r.ap, "no ground truth");
  v.numerator = r.num_pred;
  v.denominator = r.num_gt;
  return v;
}

template <typename Fn>
StrategyBlock run_block(std::string key, std::string modality, std::string description, Fn && fill)
{
  StrategyBlock block{std::move(key), std::move(modality), std::move(description), {}, {}};
  try {
    fill(block.rows);
  } catch (const std::exception & e) {
    block.rows.clear();
    block.error = e.what();
  }
  return block;
}

const ChangeFilter kTypes[] = {ChangeFilter::Insertion, ChangeFilter::Deletion};
const ElementClass kClasses[] = {ElementClass::Lane, ElementClass::PedestrianCrossing};

}  // namespace

std::optional<double> Ratio::value() const
{
  if (total == 0) {
    return std::nullopt;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

Ratio & Ratio::operator+=(const Ratio & other)
{
  hits += other.hits;
  total += other.total;
  return *this;
}

std::optional<double> ChangeAccuracy::macc() const
{
  const auto p = acc_pos();
  const auto n = acc_neg();
  if (!p || !n) {
    return std::nullopt;
  }
  return (*p + *n) / 2.0;
}

void EvalConfig::check() const
{
  check_list(epsilons, "epsilons", 0.0, 1.0, true);
  check_list(thetas, "thetas", 0.0, 1.0, true);
  check_list(lane_thresholds, "lane_thresholds", 0.0, std::numeric_limits<double>::max(), false);
  check_list(crossing_thresholds, "crossing_thresholds", 0.0, std::numeric_limits<double>::max(), false);
  if (!(iou_resolution > 0.0) || !std::isfinite(iou_resolution)) {
    throw std::invalid_argument("EvalConfig: iou_resolution must be > 0");
  }
  if (!(localization_epsilon > 0.0 && localization_epsilon < 1.0)) {
    throw std::invalid_argument("EvalConfig: localization_epsilon must be in (0, 1)");
  }
}

const std::vector<double> & EvalConfig::thresholds_for(ElementClass cls) const
{
  return cls == ElementClass::Lane ? lane_thresholds : crossing_thresholds;
}

bool sf_frame_verdict(const FramePrediction & frame, double epsilon, ChangeFilter filter)
{
  return std::any_of(frame.elements.begin(), frame.elements.end(), [&](const PredictedElement & e) {
    return flagged(e, filter) && e.score >= epsilon;
  });
}

bool mf_sequence_verdict(const Sequence & seq, double epsilon, ChangeFilter filter)
{
  return std::any_of(seq.frames.begin(), seq.frames.end(), [&](const FrameRecord & f) {
    return sf_frame_verdict(f.prediction, epsilon, filter);
  });
}

ChangeAccuracy sf_change_accuracy(const Dataset & ds, double epsilon, ChangeFilter filter, ExecutionPolicy policy)
{
  const auto frames = flatten(ds);
  // 0: true negative, 1: false positive, 2: false negative, 3: true positive
  const auto outcome = map_indices<std::uint8_t>(frames.size(), policy, [&](std::size_t i) {
    const FrameRecord & f = *frames[i].frame;
    const bool truth = frame_has_change(f.ground_truth, filter);
    const bool verdict = sf_frame_verdict(f.prediction, epsilon, filter);
    return static_cast<std::uint8_t>((truth ? 2 : 0) + (verdict ? 1 : 0));
  });
  ChangeAccuracy acc;
  for (const auto o : outcome) {
    if (o >= 2) {
      ++acc.positive.total;
      acc.positive.hits += (o == 3);
    } else {
      ++acc.negative.total;
      acc.negative.hits += (o == 0);
    }
  }
  return acc;
}

ChangeAccuracy mf_change_accuracy(const Dataset & ds, double epsilon, ChangeFilter filter, ExecutionPolicy policy)
{
  const auto outcome = map_indices<std::uint8_t>(ds.sequences.size(), policy, [&](std::size_t i) {
    const Sequence & s = ds.sequences[i];
    const bool truth = std::any_of(s.frames.begin(), s.frames.end(), [&](const FrameRecord & f) {
      return frame_has_change(f.ground_truth, filter);
    });
    const bool verdict = mf_sequence_verdict(s, epsilon, filter);
    return static_cast<std::uint8_t>((truth ? 2 : 0) + (verdict ? 1 : 0));
  });
  ChangeAccuracy acc;
  for (const auto o : outcome) {
    if (o >= 2) {
      ++acc.positive.total;
      acc.positive.hits += (o == 3);
    } else {
      ++acc.negative.total;
      acc.negative.hits += (o == 0);
    }
  }
  return acc;
}

Ratio localization_accuracy(const Dataset & ds, const LocalizationOptions & opts, ExecutionPolicy policy)
{
  if (!(opts.theta > 0.0 && opts.theta < 1.0)) {
    throw std::invalid_argument("localization_accuracy: theta must be in (0, 1)");
  }
  const auto frames = flatten(ds);
  const auto per_frame = map_indices<Ratio>(frames.size(), policy, [&](std::size_t i) {
    return localize_frame(*frames[i].frame, opts, policy);
  });
  Ratio total;
  for (const auto & r : per_frame) {
    total += r;
  }
  return total;
}

double average_precision(std::span<const bool> ranked_true_positive, std::size_t num_gt)
{
  if (num_gt == 0 || ranked_true_positive.empty()) {
    return 0.0;
  }
  const std::size_t n = ranked_true_positive.size();
  std::vector<double> precision(n);
  std::vector<double> recall(n);
  std::size_t tp = 0;
  for (std::size_t k = 0; k < n; ++k) {
    tp += ranked_true_positive[k] ? 1 : 0;
    precision[k] = static_cast<double>(tp) / static_cast<double>(k + 1);
    recall[k] = static_cast<double>(tp) / static_cast<double>(num_gt);
  }
  // Monotone precision envelope, then integrate over recall steps.
  for (std::size_t k = n - 1; k > 0; --k) {
    precision[k - 1] = std::max(precision[k - 1], precision[k]);
  }
  double ap = 0.0;
  double prev_recall = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    ap += (recall[k] - prev_recall) * precision[k];
    prev_recall = recall[k];
  }
  return ap;
}

ApResult ranked_greedy_ap(
  const Dataset & ds, const ApPopulation & population, ElementClass cls, std::span<const double> thresholds,
  ExecutionPolicy policy)
{
  const auto frames = flatten(ds);
  const auto ap_frames = map_indices<ApFrame>(frames.size(), policy, [&](std::size_t i) {
    return collect_ap_frame(*frames[i].frame, population, cls);
  });

  ApResult result;
  for (const auto & f : ap_frames) {
    result.num_gt += f.num_gt;
    result.num_pred += f.preds.size();
  }
  if (result.num_gt == 0) {
    return result;
  }

  // Global ranking: score descending, ties in dataset order.
  struct Ranked
  {
    double score;
    std::size_t frame;
    std::size_t slot;
  };
  std::vector<Ranked> order;
  order.reserve(result.num_pred);
  for (std::size_t f = 0; f < ap_frames.size(); ++f) {
    for (std::size_t r = 0; r < ap_frames[f].preds.size(); ++r) {
      order.push_back({ap_frames[f].scores[r], f, r});
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const Ranked & a, const Ranked & b) { return a.score > b.score; });

  double sum = 0.0;
  for (const double t : thresholds) {
    const auto tp_per_frame = map_indices<std::vector<bool>>(ap_frames.size(), policy, [&](std::size_t i) {
      return greedy_true_positives(ap_frames[i], t);
    });
    std::vector<bool> ranked(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      ranked[k] = tp_per_frame[order[k].frame][order[k].slot];
    }
    // std::vector<bool> is not contiguous; copy into a plain buffer.
    std::unique_ptr<bool[]> buf(new bool[ranked.size()]);
    std::copy(ranked.begin(), ranked.end(), buf.get());
    const double ap = average_precision({buf.get(), ranked.size()}, result.num_gt);
    result.per_threshold.push_back(ap);
    sum += ap;
  }
  result.ap = thresholds.empty() ? std::nullopt : std::optional<double>(sum / static_cast<double>(thresholds.size()));
  return result;
}

ClassAp changed_element_ap(const Dataset & ds, ChangeFilter filter, const EvalConfig & cfg, ExecutionPolicy policy)
{
  const ApPopulation pop{filter, filter, false};
  const auto & lane_t =
    cfg.change_ap_lane_uses_crossing_thresholds ? cfg.crossing_thresholds : cfg.lane_thresholds;
  return {
    ranked_greedy_ap(ds, pop, ElementClass::Lane, lane_t, policy),
    ranked_greedy_ap(ds, pop, ElementClass::PedestrianCrossing, cfg.crossing_thresholds, policy),
  };
}

ClassAp updated_map_ap(const Dataset & ds, const EvalConfig & cfg, ExecutionPolicy policy)
{
  const ApPopulation pop{std::nullopt, std::nullopt, cfg.updated_map_drop_deletions};
  return {
    ranked_greedy_ap(ds, pop, ElementClass::Lane, cfg.lane_thresholds, policy),
    ranked_greedy_ap(ds, pop, ElementClass::PedestrianCrossing, cfg.crossing_thresholds, policy),
  };
}

ChangeLabel predicted_status(const PredictedElement & e)
{
  if (e.ins_flag()) {
    return ChangeLabel::Inserted;
  }
  if (e.del_flag()) {
    return ChangeLabel::Deleted;
  }
  return ChangeLabel::Unchanged;
}

EvalReport evaluate_all(const Dataset & ds, const EvalConfig & cfg, ExecutionPolicy policy)
{
  cfg.check();
  ds.check_alignment();

  EvalReport report;
  report.config = cfg;
  report.sequences = ds.sequences.size();
  report.frames = ds.frame_count();

  const auto accuracy_block = [&](const char * key, bool multi_frame, bool typed) {
    const char * modality = multi_frame ? "MF" : "SF";
    std::string description = std::string(multi_frame ? "multi-frame" : "single-frame") +
                              (typed ? " type-aware" : " type-agnostic") + " change detection accuracy";
    return run_block(key, modality, description, [&](std::vector<ReportRow> & rows) {
      std::vector<ChangeFilter> filters;
      if (typed) {
        filters.assign(std::begin(kTypes), std::end(kTypes));
      } else {
        filters.push_back(ChangeFilter::Any);
      }
      for (const auto filter : filters) {
        for (const double eps : cfg.epsilons) {
          const ChangeAccuracy acc = multi_frame ? mf_change_accuracy(ds, eps, filter, policy)
                                                 : sf_change_accuracy(ds, eps, filter, policy);
          rows.push_back({std::string(to_string(filter)), "epsilon", eps, "", accuracy_values(acc, multi_frame), ""});
        }
      }
    });
  };

  const auto localization_block = [&](const char * key, bool typed) {
    std::string description = std::string("single-frame ") + (typed ? "type-aware" : "type-agnostic") +
                              " change localization accuracy (IoU)";
    return run_block(key, "SF", description, [&](std::vector<ReportRow> & rows) {
      std::vector<ChangeFilter> filters;
      if (typed) {
        filters.assign(std::begin(kTypes), std::end(kTypes));
      } else {
        filters.push_back(ChangeFilter::Any);
      }
      for (const auto filter : filters) {
        for (const double theta : cfg.thetas) {
          LocalizationOptions opts;
          opts.epsilon = cfg.localization_epsilon;
          opts.theta = theta;
          opts.filter = filter;
          opts.class_gate = cfg.localization_class_gate;
          opts.resolution = cfg.iou_resolution;
          const Ratio all = localization_accuracy(ds, opts, policy);
          opts.changed_frames_only = true;
          const Ratio changed = localization_accuracy(ds, opts, policy);
          rows.push_back(
            {std::string(to_string(filter)),
             "theta",
             theta,
             "",
             {ratio_value("acc_loca", all, "no detections"), ratio_value("acc_loca_c", changed, "no detections")},
             "rasterized-iou"});
        }
      }
    });
  };

  const auto change_ap_block = [&](const char * key, bool typed) {
    std::string description =
      std::string("single-frame ") + (typed ? "type-aware" : "type-agnostic") + " AP of changed elements";
    return run_block(key, "SF", description, [&](std::vector<ReportRow> & rows) {
      std::vector<ChangeFilter> filters;
      if (typed) {
        filters.assign(std::begin(kTypes), std::end(kTypes));
      } else {
        filters.push_back(ChangeFilter::Any);
      }
      for (const auto filter : filters) {
        const ClassAp ap = changed_element_ap(ds, filter, cfg, policy);
        for (const auto cls : kClasses) {
          rows.push_back(
            {std::string(to_string(filter)), "", std::nullopt, std::string(to_string(cls)), {ap_value(ap[cls])},
             "ranked-greedy"});
        }
      }
    });
  };

  report.strategies.push_back(accuracy_block("a", false, false));
  report.strategies.push_back(accuracy_block("b", true, false));
  report.strategies.push_back(accuracy_block("c", false, true));
  report.strategies.push_back(accuracy_block("d", true, true));
  report.strategies.push_back(localization_block("e", false));
  report.strategies.push_back(localization_block("f", true));
  report.strategies.push_back(change_ap_block("g", false));
  report.strategies.push_back(change_ap_block("h", true));
  report.strategies.push_back(
    run_block("i", "SF", "AP of the updated map", [&](std::vector<ReportRow> & rows) {
      const ClassAp ap = updated_map_ap(ds, cfg, policy);
      for (const auto cls : kClasses) {
        rows.push_back({"-", "", std::nullopt, std::string(to_string(cls)), {ap_value(ap[cls])}, "ranked-greedy"});
      }
    }));

  // Per-frame audit trail with Hungarian attribution.
  const auto frames = flatten(ds);
  struct FrameWork
  {
    FrameAudit audit;
    Attribution attribution;
  };
  const auto work = map_indices<FrameWork>(frames.size(), policy, [&](std::size_t i) {
    const FrameRecord & f = *frames[i].frame;
    FrameWork w;
    w.audit.sequence_id = ds.sequences[frames[i].seq].id;
    w.audit.frame_id = f.ground_truth.frame_id;
    w.audit.gt_change = frame_has_change(f.ground_truth, ChangeFilter::Any);
    w.audit.gt_insertion = frame_has_change(f.ground_truth, ChangeFilter::Insertion);
    w.audit.gt_deletion = frame_has_change(f.ground_truth, ChangeFilter::Deletion);
    for (const double eps : cfg.epsilons) {
      w.audit.verdicts.push_back(sf_frame_verdict(f.prediction, eps, ChangeFilter::Any));
    }
    const CostMatrix costs = build_cost_matrix(f.prediction, f.ground_truth, ExecutionPolicy::Serial);
    const Assignment a = hungarian_assign(costs);
    std::vector<bool> pred_done(f.prediction.elements.size(), false);
    std::vector<bool> gt_done(f.ground_truth.elements.size(), false);
    for (const auto & pair : a.pairs) {
      const auto & g = f.ground_truth.elements[pair.gt];
      if (pair.cost > cfg.thresholds_for(g.element.element_class).back()) {
        continue;
      }
      const auto & p = f.prediction.elements[pair.pred];
      ++w.attribution.confusion[static_cast<std::size_t>(g.label)][static_cast<std::size_t>(predicted_status(p))];
      pred_done[pair.pred] = true;
      gt_done[pair.gt] = true;
      ++w.audit.hungarian_matched;
    }
    for (std::size_t k = 0; k < pred_done.size(); ++k) {
      if (!pred_done[k]) {
        ++w.audit.unmatched_preds;
        ++w.attribution.unmatched_pred[static_cast<std::size_t>(predicted_status(f.prediction.elements[k]))];
      }
    }
    for (std::size_t k = 0; k < gt_done.size(); ++k) {
      if (!gt_done[k]) {
        ++w.audit.unmatched_gts;
        ++w.attribution.unmatched_gt[static_cast<std::size_t>(f.ground_truth.elements[k].label)];
      }
    }
    return w;
  });
  report.frame_audit.reserve(work.size());
  for (const auto & w : work) {
    report.frame_audit.push_back(w.audit);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        report.attribution.confusion[r][c] += w.attribution.confusion[r][c];
      }
      report.attribution.unmatched_gt[r] += w.attribution.unmatched_gt[r];
      report.attribution.unmatched_pred[r] += w.attribution.unmatched_pred[r];
    }
  }
  return report;
}

}  // namespace mapchange
