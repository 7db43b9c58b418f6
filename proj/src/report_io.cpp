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

#include "mapchange/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "mapchange/config_io.hpp"

namespace mapchange
{

namespace
{

const char * const kLabelNames[] = {"unchanged", "inserted", "deleted"};

Json count_or_null(const std::optional<std::size_t> & v) { return v ? Json(*v) : Json(nullptr); }

Json value_to_json(const MetricValue & v)
{
  Json obj = Json::object();
  obj["name"] = v.name;
  obj["value"] = v.value ? Json(*v.value) : Json(nullptr);
  if (!v.value) {
    obj["reason"] = v.reason.empty() ? std::string("undefined") : v.reason;
  }
  obj["numerator"] = count_or_null(v.numerator);
  obj["denominator"] = count_or_null(v.denominator);
  return obj;
}

Json row_to_json(const ReportRow & r)
{
  Json obj = Json::object();
  obj["change_class"] = r.change_class;
  obj["parameter_name"] = r.parameter_name.empty() ? Json(nullptr) : Json(r.parameter_name);
  obj["parameter"] = r.parameter ? Json(*r.parameter) : Json(nullptr);
  obj["object_type"] = r.object_type.empty() ? Json(nullptr) : Json(r.object_type);
  obj["method"] = r.method.empty() ? Json(nullptr) : Json(r.method);
  Json values = Json::array();
  for (const auto & v : r.values) {
    values.push_back(value_to_json(v));
  }
  obj["values"] = std::move(values);
  return obj;
}

Json triple(const std::array<std::size_t, 3> & a)
{
  Json obj = Json::object();
  for (std::size_t i = 0; i < 3; ++i) {
    obj[kLabelNames[i]] = a[i];
  }
  return obj;
}

std::string format_number(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string format_parameter(const ReportRow & r)
{
  if (!r.parameter) {
    return "-";
  }
  const std::string name = r.parameter_name == "epsilon" ? "eps" : r.parameter_name;
  return name + "=" + format_number(*r.parameter);
}

// Markdown cells must not break the table.
std::string cell(std::string s)
{
  for (auto & c : s) {
    if (c == '|' || c == '\n' || c == '\r') {
      c = ' ';
    }
  }
  return s;
}

void problem(std::vector<std::string> & out, const std::string & where, const std::string & what)
{
  out.push_back(where + ": " + what);
}

bool is_count(const Json & v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0); }

void check_value(const Json & v, const std::string & where, std::vector<std::string> & out)
{
  if (!v.is_object()) {
    problem(out, where, "expected an object");
    return;
  }
  if (!v.contains("name") || !v["name"].is_string()) {
    problem(out, where, "missing string 'name'");
  }
  if (!v.contains("value")) {
    problem(out, where, "missing 'value'");
    return;
  }
  const Json & value = v["value"];
  if (value.is_null()) {
    if (!v.contains("reason") || !v["reason"].is_string() || v["reason"].get<std::string>().empty()) {
      problem(out, where, "null value without a reason");
    }
  } else if (!value.is_number()) {
    problem(out, where, "value must be a number or null");
  } else {
    const double x = value.get<double>();
    if (!(x >= 0.0 && x <= 1.0)) {
      problem(out, where, "value outside [0, 1]");
    }
  }
  for (const char * key : {"numerator", "denominator"}) {
    if (!v.contains(key) || !(v[key].is_null() || is_count(v[key]))) {
      problem(out, where, std::string("'") + key + "' must be a non-negative integer or null");
    }
  }
}

void check_macc(const Json & values, const std::string & where, std::vector<std::string> & out)
{
  std::optional<double> pos;
  std::optional<double> neg;
  const Json * macc = nullptr;
  for (const auto & v : values) {
    if (!v.is_object() || !v.contains("name") || !v.contains("value") || !v["name"].is_string()) {
      continue;
    }
    const std::string name = v["name"].get<std::string>();
    const Json & value = v["value"];
    if (name == "acc_pos" && value.is_number()) {
      pos = value.get<double>();
    } else if (name == "acc_neg" && value.is_number()) {
      neg = value.get<double>();
    } else if (name == "macc") {
      macc = &value;
    }
  }
  if (macc == nullptr) {
    return;
  }
  if (pos && neg) {
    if (!macc->is_number() || std::abs(macc->get<double>() - 0.5 * (*pos + *neg)) > 1e-12) {
      problem(out, where, "macc differs from (acc_pos + acc_neg) / 2");
    }
  } else if (!macc->is_null()) {
    problem(out, where, "macc defined although acc_pos or acc_neg is undefined");
  }
}

}  // namespace

Json report_to_json(const EvalReport & report)
{
  Json doc = Json::object();
  doc["schema_version"] = kReportSchemaVersion;
  doc["config"] = to_json(report.config);
  Json summary = Json::object();
  summary["sequences"] = report.sequences;
  summary["frames"] = report.frames;
  doc["summary"] = std::move(summary);

  Json blocks = Json::array();
  for (const auto & b : report.strategies) {
    Json obj = Json::object();
    obj["key"] = b.key;
    obj["modality"] = b.modality;
    obj["description"] = b.description;
    obj["error"] = b.error.empty() ? Json(nullptr) : Json(b.error);
    Json rows = Json::array();
    for (const auto & r : b.rows) {
      rows.push_back(row_to_json(r));
    }
    obj["rows"] = std::move(rows);
    blocks.push_back(std::move(obj));
  }
  doc["strategies"] = std::move(blocks);

  Json audit = Json::array();
  for (const auto & a : report.frame_audit) {
    Json obj = Json::object();
    obj["sequence_id"] = a.sequence_id;
    obj["frame_id"] = a.frame_id;
    obj["gt_change"] = a.gt_change;
    obj["gt_insertion"] = a.gt_insertion;
    obj["gt_deletion"] = a.gt_deletion;
    obj["verdicts"] = a.verdicts;
    obj["hungarian_matched"] = a.hungarian_matched;
    obj["unmatched_preds"] = a.unmatched_preds;
    obj["unmatched_gts"] = a.unmatched_gts;
    audit.push_back(std::move(obj));
  }
  doc["frame_audit"] = std::move(audit);

  Json attribution = Json::object();
  Json confusion = Json::object();
  for (std::size_t i = 0; i < 3; ++i) {
    confusion[kLabelNames[i]] = triple(report.attribution.confusion[i]);
  }
  attribution["confusion"] = std::move(confusion);
  attribution["unmatched_gt"] = triple(report.attribution.unmatched_gt);
  attribution["unmatched_pred"] = triple(report.attribution.unmatched_pred);
  doc["attribution"] = std::move(attribution);
  return doc;
}

std::string report_to_markdown(const EvalReport & report)
{
  std::ostringstream md;
  md << "# Change detection evaluation\n\n";
  md << "Sequences: " << report.sequences << ", frames: " << report.frames << "\n\n";
  md << "| Strategy | Modality | Change class | Parameter | Object | Values |\n";
  md << "|---|---|---|---|---|---|\n";
  for (const auto & b : report.strategies) {
    const std::string head = "| (" + b.key + ") | " + b.modality + " | ";
    if (!b.error.empty()) {
      md << head << "- | - | - | error: " << cell(b.error) << " |\n";
      continue;
    }
    for (const auto & r : b.rows) {
      md << head << cell(r.change_class) << " | " << cell(format_parameter(r)) << " | "
         << (r.object_type.empty() ? std::string("-") : cell(r.object_type)) << " | ";
      for (std::size_t k = 0; k < r.values.size(); ++k) {
        const auto & v = r.values[k];
        md << (k == 0 ? "" : ", ") << cell(v.name) << "=" << (v.value ? format_number(*v.value) : std::string("--"));
      }
      md << " |\n";
    }
  }
  return md.str();
}

std::vector<std::string> validate_report_json(const Json & doc)
{
  std::vector<std::string> out;
  if (!doc.is_object()) {
    problem(out, "(root)", "expected an object");
    return out;
  }
  if (!doc.contains("schema_version") || doc["schema_version"] != kReportSchemaVersion) {
    problem(out, "schema_version", std::string("expected \"") + kReportSchemaVersion + "\"");
  }
  if (!doc.contains("config") || !doc["config"].is_object()) {
    problem(out, "config", "expected an object");
  }
  if (!doc.contains("summary") || !doc["summary"].is_object() || !doc["summary"].contains("sequences") ||
      !doc["summary"].contains("frames") || !is_count(doc["summary"]["sequences"]) ||
      !is_count(doc["summary"]["frames"])) {
    problem(out, "summary", "expected sequence and frame counts");
  }
  if (!doc.contains("strategies") || !doc["strategies"].is_array()) {
    problem(out, "strategies", "expected an array");
    return out;
  }
  const Json & blocks = doc["strategies"];
  const std::vector<std::string> keys{"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  if (blocks.size() != keys.size()) {
    problem(out, "strategies", "expected 9 strategy blocks");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string where = "strategies[" + std::to_string(i) + "]";
    const Json & b = blocks[i];
    if (!b.is_object()) {
      problem(out, where, "expected an object");
      continue;
    }
    if (!b.contains("key") || (i < keys.size() && b["key"] != keys[i])) {
      problem(out, where + ".key", "unexpected strategy key");
    }
    for (const char * key : {"modality", "description"}) {
      if (!b.contains(key) || !b[key].is_string()) {
        problem(out, where + "." + key, "expected a string");
      }
    }
    if (b.contains("modality") && b["modality"] != "SF" && b["modality"] != "MF") {
      problem(out, where + ".modality", "expected \"SF\" or \"MF\"");
    }
    if (!b.contains("error") || !(b["error"].is_null() || b["error"].is_string())) {
      problem(out, where + ".error", "expected a string or null");
    }
    if (!b.contains("rows") || !b["rows"].is_array()) {
      problem(out, where + ".rows", "expected an array");
      continue;
    }
    if (b["rows"].empty() && b.contains("error") && b["error"].is_null()) {
      problem(out, where + ".rows", "no rows and no error");
    }
    for (std::size_t r = 0; r < b["rows"].size(); ++r) {
      const std::string rw = where + ".rows[" + std::to_string(r) + "]";
      const Json & row = b["rows"][r];
      if (!row.is_object()) {
        problem(out, rw, "expected an object");
        continue;
      }
      if (!row.contains("change_class") || !row["change_class"].is_string()) {
        problem(out, rw + ".change_class", "expected a string");
      }
      for (const char * key : {"parameter_name", "object_type", "method"}) {
        if (!row.contains(key) || !(row[key].is_null() || row[key].is_string())) {
          problem(out, rw + "." + key, "expected a string or null");
        }
      }
      if (!row.contains("parameter") || !(row["parameter"].is_null() || row["parameter"].is_number())) {
        problem(out, rw + ".parameter", "expected a number or null");
      }
      if (!row.contains("values") || !row["values"].is_array() || row["values"].empty()) {
        problem(out, rw + ".values", "expected a non-empty array");
        continue;
      }
      for (std::size_t v = 0; v < row["values"].size(); ++v) {
        check_value(row["values"][v], rw + ".values[" + std::to_string(v) + "]", out);
      }
      check_macc(row["values"], rw, out);
    }
  }
  if (!doc.contains("frame_audit") || !doc["frame_audit"].is_array()) {
    problem(out, "frame_audit", "expected an array");
  }
  if (!doc.contains("attribution") || !doc["attribution"].is_object()) {
    problem(out, "attribution", "expected an object");
  }
  return out;
}

}  // namespace mapchange
