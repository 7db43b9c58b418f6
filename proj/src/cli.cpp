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

#include "mapchange/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "mapchange/config_io.hpp"
#include "mapchange/dataset_io.hpp"
#include "mapchange/errors.hpp"
#include "mapchange/map_model.hpp"
#include "mapchange/metrics.hpp"
#include "mapchange/prior_encoding.hpp"
#include "mapchange/render.hpp"
#include "mapchange/report_io.hpp"
#include "mapchange/simulator.hpp"

namespace mapchange
{

namespace fs = std::filesystem;

namespace
{

template <typename F>
auto from_file(const std::string & path, F && parse)
{
  const std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const SchemaError & e) {
    throw SchemaError(path + ": " + e.field, e.detail);
  } catch (const ParseError & e) {
    throw ParseError(path + ": " + e.what(), e.line, e.column);
  }
}

Json json_file(const std::string & path)
{
  return from_file(path, [](const std::string & t) { return parse_json(t); });
}

void write_output(const std::string & path, std::string_view contents)
{
  const fs::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  write_text_file(path, contents);
}

struct EvaluateArgs
{
  std::string dataset;
  std::string config;
  std::string out;
  std::string markdown;
  bool serial{false};
};

int run_evaluate(const EvaluateArgs & a, std::ostream & out, std::ostream & err)
{
  const EvalConfig cfg =
    a.config.empty() ? EvalConfig{} : from_file(a.config, [](const std::string & t) {
      return eval_config_from_json(parse_json(t));
    });
  const Dataset ds = load_dataset(a.dataset);
  const EvalReport report = evaluate_all(ds, cfg, a.serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel);
  const Json doc = report_to_json(report);
  const auto problems = validate_report_json(doc);
  if (!problems.empty()) {
    for (const auto & p : problems) {
      err << "report: " << p << "\n";
    }
    return kExitDataError;
  }
  write_output(a.out, dump_json(doc));
  if (!a.markdown.empty()) {
    write_output(a.markdown, report_to_markdown(report));
  }
  for (const auto & b : report.strategies) {
    if (!b.error.empty()) {
      err << "warning: strategy (" << b.key << ") failed: " << b.error << "\n";
    }
  }
  out << "evaluated " << report.sequences << " sequences, " << report.frames << " frames -> " << a.out << "\n";
  return kExitOk;
}

struct PerturbArgs
{
  std::string world;
  std::string mode{"mixed"};
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
};

PerturbationMode parse_mode(const std::string & m)
{
  if (m == "insertions") {
    return PerturbationMode::Insertions;
  }
  if (m == "deletions") {
    return PerturbationMode::Deletions;
  }
  return PerturbationMode::Mixed;
}

int run_perturb(const PerturbArgs & a, std::ostream & out, std::ostream & err)
{
  std::vector<std::string> warnings;
  const LocalMap world = from_file(a.world, [&](const std::string & t) { return load_map(t, &warnings); });
  for (const auto & w : warnings) {
    err << "warning: " << a.world << ": " << w << "\n";
  }
  const auto violations = validate_map(world);
  if (!violations.empty()) {
    for (const auto & v : violations) {
      err << a.world << ": " << to_string(v.kind) << " '" << v.element_id << "': " << v.detail << "\n";
    }
    return kExitDataError;
  }
  PerturbationConfig cfg;
  if (a.config.empty()) {
    cfg.deletion_probability = 0.5;
    cfg.insertion_rate = 1.0;
  } else {
    cfg = from_file(a.config, [](const std::string & t) { return perturbation_config_from_json(parse_json(t)); });
  }
  if (a.seed) {
    cfg.rng_seed = *a.seed;
  }
  const SynthesisResult r = perturb(world, parse_mode(a.mode), cfg);

  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) {
    throw DataError("cannot create directory '" + a.out + "': " + ec.message());
  }
  const fs::path dir(a.out);
  write_text_file((dir / "stale.json").string(), save_map(r.stale));
  write_text_file((dir / "gt.json").string(), save_ground_truth(r.gt));

  Json manifest = Json::object();
  manifest["schema_version"] = kManifestSchemaVersion;
  manifest["mode"] = a.mode;
  manifest["config"] = to_json(cfg);
  Json row = Json::object();
  row["frame_id"] = r.gt.frame_id;
  row["world_elements"] = world.elements.size();
  row["stale_elements"] = r.stale.elements.size();
  row["unchanged"] = r.gt.count(ChangeLabel::Unchanged);
  row["inserted"] = r.gt.count(ChangeLabel::Inserted);
  row["deleted"] = r.gt.count(ChangeLabel::Deleted);
  manifest["frames"] = Json::array({row});
  write_text_file((dir / "manifest.json").string(), dump_json(manifest));
  out << "perturbed '" << r.gt.frame_id << "': " << r.gt.count(ChangeLabel::Inserted) << " inserted, "
      << r.gt.count(ChangeLabel::Deleted) << " deleted -> " << a.out << "\n";
  return kExitOk;
}

struct SimulateArgs
{
  std::string preset{"paper-stats"};
  std::string noise;
  std::string perturbation;
  std::size_t sequences{4};
  std::size_t frames{10};
  std::optional<std::uint64_t> seed;
  std::string out;
  bool serial{false};
};

int run_simulate(const SimulateArgs & a, std::ostream & out)
{
  const std::uint64_t seed = a.seed.value_or(0);
  NoiseConfig noise = a.noise.empty() ? NoiseConfig::identity(seed) : from_file(a.noise, [](const std::string & t) {
    return noise_config_from_json(parse_json(t));
  });
  if (a.seed) {
    noise.rng_seed = *a.seed;
  }
  const ExecutionPolicy policy = a.serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
  Dataset ds;
  if (a.preset == "paper-stats") {
    ds = build_paper_stats_dataset(noise, seed, policy);
  } else {
    DatasetSpec spec;
    spec.n_sequences = a.sequences;
    spec.frames_per_sequence = a.frames;
    spec.noise = noise;
    spec.seed = seed;
    if (a.perturbation.empty()) {
      spec.perturbation.deletion_probability = 0.5;
      spec.perturbation.insertion_rate = 1.0;
    } else {
      spec.perturbation = from_file(a.perturbation, [](const std::string & t) {
        return perturbation_config_from_json(parse_json(t));
      });
    }
    ds = build_synthetic_dataset(spec, policy);
  }
  save_dataset(ds, a.out);
  const Manifest m = make_manifest(ds);
  out << "simulated " << m.sequences.size() << " sequences (" << m.change_sequences() << " with change), "
      << m.frames() << " frames, " << m.insertions() << " insertions, " << m.deletions() << " deletions -> "
      << a.out << "\n";
  return kExitOk;
}

struct RenderArgs
{
  std::string input;
  std::string out;
  std::string kind{"auto"};
  double epsilon{0.0};
  std::vector<double> fov;
};

std::string detect_kind(const Json & doc)
{
  if (doc.is_object() && doc.contains("elements") && doc["elements"].is_array()) {
    for (const auto & e : doc["elements"]) {
      if (e.is_object() && e.contains("score")) {
        return "pred";
      }
      if (e.is_object() && e.contains("label")) {
        return "gt";
      }
    }
  }
  return "map";
}

int run_render(const RenderArgs & a, std::ostream & out, std::ostream & err)
{
  const std::string kind = a.kind == "auto" ? detect_kind(json_file(a.input)) : a.kind;
  RenderedSvg svg;
  const auto parse = [&](auto && fn) { return from_file(a.input, fn); };
  if (kind == "pred") {
    Fov fov;
    if (!a.fov.empty()) {
      if (a.fov.size() != 4) {
        throw std::invalid_argument("--fov expects 4 numbers: xmin ymin xmax ymax");
      }
      fov = {a.fov[0], a.fov[1], a.fov[2], a.fov[3]};
    }
    svg = render_change_map(parse([](const std::string & t) { return load_prediction(t); }), fov, {}, a.epsilon);
  } else if (kind == "gt") {
    svg = render_change_map(parse([](const std::string & t) { return load_ground_truth(t); }));
  } else {
    const LocalMap map = parse([](const std::string & t) { return load_map(t); });
    FrameGroundTruth gt;
    gt.frame_id = map.frame_id;
    gt.fov = map.fov;
    for (const auto & e : map.elements) {
      gt.elements.push_back({e, ChangeLabel::Unchanged});
    }
    svg = render_change_map(gt);
  }
  for (const auto & w : svg.warnings) {
    err << "warning: " << a.input << ": " << w << "\n";
  }
  write_output(a.out, svg.svg);
  out << "rendered " << a.input << " (" << kind << ") -> " << a.out << "\n";
  return kExitOk;
}

int run_validate(const std::string & path, std::ostream & out)
{
  std::vector<std::string> warnings;
  const LocalMap map = from_file(path, [&](const std::string & t) { return load_map(t, &warnings); });
  for (const auto & w : warnings) {
    out << path << ": warning: " << w << "\n";
  }
  const auto violations = validate_map(map);
  for (const auto & v : violations) {
    out << path << ": " << to_string(v.kind) << " '" << v.element_id << "': " << v.detail << "\n";
  }
  if (!violations.empty()) {
    return kExitDataError;
  }
  out << path << ": ok (" << map.elements.size() << " elements)\n";
  return kExitOk;
}

struct EncodeArgs
{
  std::string map;
  std::size_t d{16};
  double frequency_base{1000.0};
  std::string format{"csv"};
  std::string out;
};

int run_encode(const EncodeArgs & a, std::ostream & out)
{
  EncoderConfig cfg;
  cfg.d = a.d;
  cfg.frequency_base = a.frequency_base;
  cfg.check();
  const LocalMap map = from_file(a.map, [](const std::string & t) { return load_map(t); });
  const PriorEncoding enc = encode_prior(map, cfg);
  write_output(a.out, a.format == "csv" ? encoding_to_csv(enc) : encoding_to_binary(enc));
  out << "encoded " << enc.rows() << " x " << enc.cols() << " -> " << a.out << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Element-based HD map change detection evaluation toolkit", "mapchange"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto * evaluate = app.add_subcommand("evaluate", "Run all evaluation strategies over a dataset directory");
  evaluate->add_option("--dataset", ev.dataset, "Dataset directory with manifest.json")->required();
  evaluate->add_option("--config", ev.config, "EvalConfig JSON");
  evaluate->add_option("--out", ev.out, "Report JSON output")->required();
  evaluate->add_option("--markdown", ev.markdown, "Markdown summary output");
  evaluate->add_flag("--serial", ev.serial, "Use the serial reference kernels");

  PerturbArgs pt;
  auto * perturb_cmd = app.add_subcommand("perturb", "Synthesize a stale map and labeled ground truth");
  perturb_cmd->add_option("--world", pt.world, "Up-to-date world map JSON")->required();
  perturb_cmd->add_option("--mode", pt.mode, "insertions, deletions or mixed")
    ->check(CLI::IsMember({"insertions", "deletions", "mixed"}));
  perturb_cmd->add_option("--config", pt.config, "PerturbationConfig JSON");
  perturb_cmd->add_option("--seed", pt.seed, "RNG seed (overrides rng_seed)");
  perturb_cmd->add_option("--out", pt.out, "Output directory")->required();

  SimulateArgs sm;
  auto * simulate = app.add_subcommand("simulate", "Build a synthetic dataset with a simulated detector");
  simulate->add_option("--preset", sm.preset, "paper-stats or synthetic")
    ->check(CLI::IsMember({"paper-stats", "synthetic"}));
  simulate->add_option("--noise", sm.noise, "NoiseConfig JSON (default: perfect detector)");
  simulate->add_option("--perturbation", sm.perturbation, "PerturbationConfig JSON (synthetic preset)");
  simulate->add_option("--sequences", sm.sequences, "Sequence count (synthetic preset)")
    ->check(CLI::PositiveNumber);
  simulate->add_option("--frames", sm.frames, "Frames per sequence (synthetic preset)")
    ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sm.seed, "RNG seed (overrides rng_seed)");
  simulate->add_option("--out", sm.out, "Output dataset directory")->required();
  simulate->add_flag("--serial", sm.serial, "Use the serial reference path");

  RenderArgs rd;
  auto * render_cmd = app.add_subcommand("render", "Render a change map as SVG");
  render_cmd->add_option("--input", rd.input, "Ground-truth, prediction or map JSON")->required();
  render_cmd->add_option("--out", rd.out, "SVG output")->required();
  render_cmd->add_option("--kind", rd.kind, "auto, gt, pred or map")
    ->check(CLI::IsMember({"auto", "gt", "pred", "map"}));
  render_cmd->add_option("--epsilon", rd.epsilon, "Minimum score for predicted elements")
    ->check(CLI::Range(0.0, 1.0));
  render_cmd->add_option("--fov", rd.fov, "Canvas bounds for predictions: xmin ymin xmax ymax")
    ->expected(4);

  std::string validate_path;
  auto * validate = app.add_subcommand("validate", "Validate a map JSON file");
  validate->add_option("--map", validate_path, "Map JSON")->required();

  EncodeArgs en;
  auto * encode = app.add_subcommand("encode", "Encode a prior map as a feature matrix");
  encode->add_option("--map", en.map, "Map JSON")->required();
  encode->add_option("--d", en.d, "Per-point embedding budget (multiple of 4)");
  encode->add_option("--frequency-base", en.frequency_base, "Positional encoding base");
  encode->add_option("--format", en.format, "csv or bin")->check(CLI::IsMember({"csv", "bin"}));
  encode->add_option("--out", en.out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError & e) {
    err << "error: " << e.what() << "\n\n";
    err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitUsage;
  }

  try {
    if (evaluate->parsed()) {
      return run_evaluate(ev, out, err);
    }
    if (perturb_cmd->parsed()) {
      return run_perturb(pt, out, err);
    }
    if (simulate->parsed()) {
      return run_simulate(sm, out);
    }
    if (render_cmd->parsed()) {
      return run_render(rd, out, err);
    }
    if (validate->parsed()) {
      return run_validate(validate_path, out);
    }
    if (encode->parsed()) {
      return run_encode(en, out);
    }
  } catch (const DataError & e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument & e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace mapchange
