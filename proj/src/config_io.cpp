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

#include "mapchange/config_io.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "mapchange/errors.hpp"

namespace mapchange
{

namespace
{

class Reader
{
public:
  Reader(const Json & doc, std::string path, std::initializer_list<const char *> known)
  : doc_(doc), path_(std::move(path))
  {
    if (!doc.is_object()) {
      throw SchemaError(path_.empty() ? "(root)" : path_, "expected an object");
    }
    const std::set<std::string> allowed(known.begin(), known.end());
    for (const auto & item : doc.items()) {
      if (allowed.count(item.key()) == 0) {
        throw SchemaError(where(item.key()), "unknown field");
      }
    }
  }

  std::string where(const std::string & key) const { return path_.empty() ? key : path_ + "." + key; }

  const Json * find(const char * key) const
  {
    const auto it = doc_.find(key);
    return it == doc_.end() ? nullptr : &*it;
  }

  void number(const char * key, double & out) const
  {
    if (const Json * v = find(key)) {
      if (!v->is_number()) {
        throw SchemaError(where(key), "expected a number");
      }
      out = v->get<double>();
    }
  }

  void boolean(const char * key, bool & out) const
  {
    if (const Json * v = find(key)) {
      if (!v->is_boolean()) {
        throw SchemaError(where(key), "expected a boolean");
      }
      out = v->get<bool>();
    }
  }

  void list(const char * key, std::vector<double> & out) const
  {
    if (const Json * v = find(key)) {
      if (!v->is_array()) {
        throw SchemaError(where(key), "expected an array of numbers");
      }
      out.clear();
      for (const auto & x : *v) {
        if (!x.is_number()) {
          throw SchemaError(where(key), "expected an array of numbers");
        }
        out.push_back(x.get<double>());
      }
    }
  }

  void seed(const char * key, std::uint64_t & out) const
  {
    if (const Json * v = find(key)) {
      if (v->is_number_unsigned()) {
        out = v->get<std::uint64_t>();
      } else if (v->is_number_integer() && v->get<std::int64_t>() >= 0) {
        out = static_cast<std::uint64_t>(v->get<std::int64_t>());
      } else {
        throw SchemaError(where(key), "expected a non-negative 64-bit integer");
      }
    }
  }

  void count(const char * key, std::optional<std::size_t> & out) const
  {
    if (const Json * v = find(key)) {
      if (v->is_null()) {
        out.reset();
      } else if (v->is_number_unsigned() || (v->is_number_integer() && v->get<std::int64_t>() >= 0)) {
        out = v->get<std::size_t>();
      } else {
        throw SchemaError(where(key), "expected a non-negative integer or null");
      }
    }
  }

  void optional_number(const char * key, std::optional<double> & out) const
  {
    if (const Json * v = find(key)) {
      if (v->is_null()) {
        out.reset();
      } else if (v->is_number()) {
        out = v->get<double>();
      } else {
        throw SchemaError(where(key), "expected a number or null");
      }
    }
  }

private:
  const Json & doc_;
  std::string path_;
};

template <typename Cfg>
void checked(const Cfg & cfg, const char * what)
{
  try {
    cfg.check();
  } catch (const std::invalid_argument & e) {
    throw SchemaError(what, e.what());
  }
}

Json optional_to_json(const std::optional<double> & v) { return v ? Json(*v) : Json(nullptr); }
Json optional_to_json(const std::optional<std::size_t> & v) { return v ? Json(*v) : Json(nullptr); }

Json score_to_json(const ScoreModel & m)
{
  Json obj = Json::object();
  obj["alpha"] = m.alpha;
  obj["beta"] = m.beta;
  obj["constant"] = optional_to_json(m.constant);
  return obj;
}

ScoreModel score_from_json(const Json & doc, const std::string & path, ScoreModel m)
{
  const Reader r(doc, path, {"alpha", "beta", "constant"});
  r.number("alpha", m.alpha);
  r.number("beta", m.beta);
  r.optional_number("constant", m.constant);
  return m;
}

}  // namespace

Json to_json(const EvalConfig & cfg)
{
  Json obj = Json::object();
  obj["epsilons"] = cfg.epsilons;
  obj["thetas"] = cfg.thetas;
  obj["lane_thresholds"] = cfg.lane_thresholds;
  obj["crossing_thresholds"] = cfg.crossing_thresholds;
  obj["iou_resolution"] = cfg.iou_resolution;
  obj["localization_epsilon"] = cfg.localization_epsilon;
  obj["localization_class_gate"] = cfg.localization_class_gate;
  obj["change_ap_lane_uses_crossing_thresholds"] = cfg.change_ap_lane_uses_crossing_thresholds;
  obj["updated_map_drop_deletions"] = cfg.updated_map_drop_deletions;
  return obj;
}

EvalConfig eval_config_from_json(const Json & doc)
{
  const Reader r(
    doc, "",
    {"epsilons", "thetas", "lane_thresholds", "crossing_thresholds", "iou_resolution", "localization_epsilon",
     "localization_class_gate", "change_ap_lane_uses_crossing_thresholds", "updated_map_drop_deletions"});
  EvalConfig cfg;
  r.list("epsilons", cfg.epsilons);
  r.list("thetas", cfg.thetas);
  r.list("lane_thresholds", cfg.lane_thresholds);
  r.list("crossing_thresholds", cfg.crossing_thresholds);
  r.number("iou_resolution", cfg.iou_resolution);
  r.number("localization_epsilon", cfg.localization_epsilon);
  r.boolean("localization_class_gate", cfg.localization_class_gate);
  r.boolean("change_ap_lane_uses_crossing_thresholds", cfg.change_ap_lane_uses_crossing_thresholds);
  r.boolean("updated_map_drop_deletions", cfg.updated_map_drop_deletions);
  checked(cfg, "EvalConfig");
  return cfg;
}

Json to_json(const PerturbationConfig & cfg)
{
  Json obj = Json::object();
  obj["deletion_probability"] = cfg.deletion_probability;
  obj["insertion_rate"] = cfg.insertion_rate;
  obj["crossing_length"] = cfg.crossing_length;
  obj["rng_seed"] = cfg.rng_seed;
  obj["target_ratio"] = optional_to_json(cfg.target_ratio);
  obj["exact_removals"] = optional_to_json(cfg.exact_removals);
  obj["exact_additions"] = optional_to_json(cfg.exact_additions);
  return obj;
}

PerturbationConfig perturbation_config_from_json(const Json & doc)
{
  const Reader r(
    doc, "",
    {"deletion_probability", "insertion_rate", "crossing_length", "rng_seed", "target_ratio", "exact_removals",
     "exact_additions"});
  PerturbationConfig cfg;
  r.number("deletion_probability", cfg.deletion_probability);
  r.number("insertion_rate", cfg.insertion_rate);
  r.number("crossing_length", cfg.crossing_length);
  r.seed("rng_seed", cfg.rng_seed);
  r.optional_number("target_ratio", cfg.target_ratio);
  r.count("exact_removals", cfg.exact_removals);
  r.count("exact_additions", cfg.exact_additions);
  checked(cfg, "PerturbationConfig");
  return cfg;
}

Json to_json(const NoiseConfig & cfg)
{
  Json obj = Json::object();
  obj["miss_rate"] = cfg.miss_rate;
  obj["clutter_rate"] = cfg.clutter_rate;
  obj["jitter_sigma"] = cfg.jitter_sigma;
  obj["flag_flip_rate"] = cfg.flag_flip_rate;
  obj["false_alarm_rate"] = cfg.false_alarm_rate;
  obj["clutter_change_prob"] = cfg.clutter_change_prob;
  obj["score_true"] = score_to_json(cfg.score_true);
  obj["score_clutter"] = score_to_json(cfg.score_clutter);
  obj["rng_seed"] = cfg.rng_seed;
  return obj;
}

NoiseConfig noise_config_from_json(const Json & doc)
{
  const Reader r(
    doc, "",
    {"miss_rate", "clutter_rate", "jitter_sigma", "flag_flip_rate", "false_alarm_rate", "clutter_change_prob",
     "score_true", "score_clutter", "rng_seed"});
  NoiseConfig cfg;
  r.number("miss_rate", cfg.miss_rate);
  r.number("clutter_rate", cfg.clutter_rate);
  r.number("jitter_sigma", cfg.jitter_sigma);
  r.number("flag_flip_rate", cfg.flag_flip_rate);
  r.number("false_alarm_rate", cfg.false_alarm_rate);
  r.number("clutter_change_prob", cfg.clutter_change_prob);
  if (const Json * v = r.find("score_true")) {
    cfg.score_true = score_from_json(*v, "score_true", cfg.score_true);
  }
  if (const Json * v = r.find("score_clutter")) {
    cfg.score_clutter = score_from_json(*v, "score_clutter", cfg.score_clutter);
  }
  r.seed("rng_seed", cfg.rng_seed);
  checked(cfg, "NoiseConfig");
  return cfg;
}

}  // namespace mapchange
