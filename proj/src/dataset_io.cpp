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

#include "mapchange/dataset_io.hpp"

#include <filesystem>
#include <set>
#include <stdexcept>

#include "mapchange/errors.hpp"
#include "mapchange/map_model.hpp"

namespace mapchange
{

namespace fs = std::filesystem;

namespace
{

double probability(const Json & obj, const char * key, const std::string & path)
{
  const double v = require_number(obj, key, path);
  if (!(v >= 0.0 && v <= 1.0)) {
    throw SchemaError(path + "." + key, "expected a value in [0, 1]");
  }
  return v;
}

const Json & require_array(const Json & obj, const char * key, const std::string & path)
{
  const Json & v = require(obj, key, path);
  if (!v.is_array()) {
    throw SchemaError(path.empty() ? std::string(key) : path + "." + key, "expected an array");
  }
  return v;
}

std::size_t require_count(const Json & obj, const char * key, const std::string & path)
{
  const Json & v = require(obj, key, path);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw SchemaError(path + "." + key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string element_path(std::size_t i) { return "elements[" + std::to_string(i) + "]"; }

template <typename F>
auto with_file(const fs::path & path, F && f)
{
  try {
    return f(read_text_file(path.string()));
  } catch (const SchemaError & e) {
    throw SchemaError(path.string() + ": " + e.field, e.detail);
  } catch (const ParseError & e) {
    throw ParseError(path.string() + ": " + e.what(), e.line, e.column);
  }
}

}  // namespace

std::size_t Manifest::change_sequences() const
{
  std::size_t n = 0;
  for (const auto & s : sequences) {
    n += s.has_change ? 1 : 0;
  }
  return n;
}

std::size_t Manifest::no_change_sequences() const { return sequences.size() - change_sequences(); }

std::size_t Manifest::insertions() const
{
  std::size_t n = 0;
  for (const auto & s : sequences) {
    n += s.insertions;
  }
  return n;
}

std::size_t Manifest::deletions() const
{
  std::size_t n = 0;
  for (const auto & s : sequences) {
    n += s.deletions;
  }
  return n;
}

std::size_t Manifest::frames() const
{
  std::size_t n = 0;
  for (const auto & s : sequences) {
    n += s.frame_ids.size();
  }
  return n;
}

Manifest make_manifest(const Dataset & ds)
{
  Manifest m;
  for (const auto & seq : ds.sequences) {
    SequenceManifest sm;
    sm.id = seq.id;
    std::set<std::string> ins;
    std::set<std::string> del;
    for (const auto & f : seq.frames) {
      sm.frame_ids.push_back(f.ground_truth.frame_id);
      for (const auto & e : f.ground_truth.elements) {
        if (e.label == ChangeLabel::Inserted) {
          ins.insert(e.element.id);
        } else if (e.label == ChangeLabel::Deleted) {
          del.insert(e.element.id);
        }
      }
    }
    sm.insertions = ins.size();
    sm.deletions = del.size();
    sm.has_change = seq.has_change();
    m.sequences.push_back(std::move(sm));
  }
  return m;
}

Json manifest_to_json(const Manifest & m)
{
  Json doc = Json::object();
  doc["schema_version"] = kManifestSchemaVersion;
  Json seqs = Json::array();
  for (const auto & s : m.sequences) {
    Json js = Json::object();
    js["id"] = s.id;
    js["frame_count"] = s.frame_ids.size();
    js["frames"] = s.frame_ids;
    js["insertions"] = s.insertions;
    js["deletions"] = s.deletions;
    js["has_change"] = s.has_change;
    seqs.push_back(std::move(js));
  }
  doc["sequences"] = std::move(seqs);
  Json totals = Json::object();
  totals["sequences"] = m.sequences.size();
  totals["change_sequences"] = m.change_sequences();
  totals["no_change_sequences"] = m.no_change_sequences();
  totals["frames"] = m.frames();
  totals["insertions"] = m.insertions();
  totals["deletions"] = m.deletions();
  doc["totals"] = std::move(totals);
  return doc;
}

Manifest manifest_from_json(const Json & doc)
{
  if (!doc.is_object()) {
    throw SchemaError("(root)", "expected an object");
  }
  const std::string version = require_string(doc, "schema_version", "");
  if (version != kManifestSchemaVersion) {
    throw SchemaError("schema_version", "unsupported version \"" + version + "\"");
  }
  Manifest m;
  const Json & seqs = require_array(doc, "sequences", "");
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const std::string path = "sequences[" + std::to_string(i) + "]";
    const Json & js = seqs[i];
    if (!js.is_object()) {
      throw SchemaError(path, "expected an object");
    }
    SequenceManifest s;
    s.id = require_string(js, "id", path);
    if (s.id.empty() || s.id.find_first_of("/\\") != std::string::npos || s.id == "." || s.id == "..") {
      throw SchemaError(path + ".id", "invalid sequence id \"" + s.id + "\"");
    }
    for (const auto & f : require_array(js, "frames", path)) {
      if (!f.is_string() || f.get<std::string>().empty()) {
        throw SchemaError(path + ".frames", "expected non-empty string frame ids");
      }
      const std::string fid = f.get<std::string>();
      if (fid.find_first_of("/\\") != std::string::npos || fid == "." || fid == "..") {
        throw SchemaError(path + ".frames", "invalid frame id \"" + fid + "\"");
      }
      s.frame_ids.push_back(fid);
    }
    if (s.frame_ids.empty()) {
      throw SchemaError(path + ".frames", "sequence has no frames");
    }
    if (const auto it = js.find("frame_count"); it != js.end() && *it != s.frame_ids.size()) {
      throw SchemaError(path + ".frame_count", "does not match the frames list");
    }
    s.insertions = require_count(js, "insertions", path);
    s.deletions = require_count(js, "deletions", path);
    const Json & hc = require(js, "has_change", path);
    if (!hc.is_boolean()) {
      throw SchemaError(path + ".has_change", "expected a boolean");
    }
    s.has_change = hc.get<bool>();
    m.sequences.push_back(std::move(s));
  }
  return m;
}

std::string save_ground_truth(const FrameGroundTruth & gt)
{
  Json doc = Json::object();
  doc["frame_id"] = gt.frame_id;
  doc["fov"] = to_json(gt.fov);
  Json elems = Json::array();
  for (const auto & e : gt.elements) {
    Json obj = to_json(e.element);
    obj["label"] = std::string(to_string(e.label));
    elems.push_back(std::move(obj));
  }
  doc["elements"] = std::move(elems);
  return dump_json(doc);
}

FrameGroundTruth load_ground_truth(std::string_view text)
{
  const Json doc = parse_json(text);
  if (!doc.is_object()) {
    throw SchemaError("(root)", "expected an object");
  }
  FrameGroundTruth gt;
  gt.frame_id = require_string(doc, "frame_id", "");
  gt.fov = fov_from_json(require(doc, "fov", ""), "fov");
  const Json & elems = require_array(doc, "elements", "");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::string path = element_path(i);
    LabeledElement le;
    le.element = segment_from_json(elems[i], path, nullptr);
    const std::string label = require_string(elems[i], "label", path);
    try {
      le.label = change_label_from_string(label);
    } catch (const std::invalid_argument &) {
      throw SchemaError(path + ".label", "expected \"unchanged\", \"inserted\" or \"deleted\", got \"" + label + "\"");
    }
    gt.elements.push_back(std::move(le));
  }
  return gt;
}

std::string save_prediction(const FramePrediction & pred)
{
  Json doc = Json::object();
  doc["frame_id"] = pred.frame_id;
  Json elems = Json::array();
  for (const auto & e : pred.elements) {
    Json obj = to_json(e.geometry);
    obj["score"] = e.score;
    obj["ins_prob"] = e.ins_prob;
    obj["del_prob"] = e.del_prob;
    elems.push_back(std::move(obj));
  }
  doc["elements"] = std::move(elems);
  return dump_json(doc);
}

FramePrediction load_prediction(std::string_view text)
{
  const Json doc = parse_json(text);
  if (!doc.is_object()) {
    throw SchemaError("(root)", "expected an object");
  }
  FramePrediction pred;
  pred.frame_id = require_string(doc, "frame_id", "");
  const Json & elems = require_array(doc, "elements", "");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::string path = element_path(i);
    PredictedElement pe;
    pe.geometry = segment_from_json(elems[i], path, nullptr);
    pe.score = probability(elems[i], "score", path);
    pe.ins_prob = probability(elems[i], "ins_prob", path);
    pe.del_prob = probability(elems[i], "del_prob", path);
    pred.elements.push_back(std::move(pe));
  }
  return pred;
}

void save_dataset(const Dataset & ds, const std::string & dir)
{
  ds.check_alignment();
  const fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) {
    throw DataError("cannot create directory '" + dir + "': " + ec.message());
  }
  for (const auto & seq : ds.sequences) {
    const fs::path sdir = root / seq.id;
    for (const char * sub : {"stale", "gt", "pred"}) {
      fs::create_directories(sdir / sub, ec);
      if (ec) {
        throw DataError("cannot create directory '" + (sdir / sub).string() + "': " + ec.message());
      }
    }
    for (const auto & f : seq.frames) {
      const std::string name = f.ground_truth.frame_id + ".json";
      write_text_file((sdir / "stale" / name).string(), save_map(f.stale));
      write_text_file((sdir / "gt" / name).string(), save_ground_truth(f.ground_truth));
      write_text_file((sdir / "pred" / name).string(), save_prediction(f.prediction));
    }
  }
  write_text_file((root / "manifest.json").string(), dump_json(manifest_to_json(make_manifest(ds))));
}

Dataset load_dataset(const std::string & dir)
{
  const fs::path root(dir);
  const fs::path manifest_path = root / "manifest.json";
  const Manifest m = with_file(manifest_path, [](const std::string & text) {
    return manifest_from_json(parse_json(text));
  });
  Dataset ds;
  for (const auto & sm : m.sequences) {
    Sequence seq;
    seq.id = sm.id;
    for (const auto & fid : sm.frame_ids) {
      const std::string name = fid + ".json";
      FrameRecord f;
      f.stale = with_file(root / sm.id / "stale" / name, [](const std::string & t) { return load_map(t); });
      f.ground_truth =
        with_file(root / sm.id / "gt" / name, [](const std::string & t) { return load_ground_truth(t); });
      f.prediction =
        with_file(root / sm.id / "pred" / name, [](const std::string & t) { return load_prediction(t); });
      if (f.ground_truth.frame_id != fid || f.prediction.frame_id != fid) {
        throw DataError(
          (root / sm.id).string() + ": frame '" + fid + "' has mismatched frame_id in gt or pred file");
      }
      seq.frames.push_back(std::move(f));
    }
    ds.sequences.push_back(std::move(seq));
  }
  ds.check_alignment();
  return ds;
}

}  // namespace mapchange
