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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mapchange/change_synthesis.hpp"
#include "mapchange/cli.hpp"
#include "mapchange/config_io.hpp"
#include "mapchange/dataset_io.hpp"
#include "mapchange/geometry.hpp"
#include "mapchange/map_model.hpp"
#include "mapchange/matching.hpp"
#include "mapchange/metrics.hpp"
#include "mapchange/prior_encoding.hpp"
#include "mapchange/report_io.hpp"
#include "mapchange/simulator.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mapchange;
namespace fs = std::filesystem;

namespace
{

// Collects failed checks; the criterion passes when none are recorded.
class Check
{
public:
  void expect(bool ok, const std::string & what)
  {
    ++checks_;
    if (!ok && failures_.size() < 5) {
      failures_.push_back(what);
    }
    failed_ += ok ? 0 : 1;
  }
  void note(const std::string & s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const
  {
    std::string s = std::to_string(checks_) + " checks";
    if (!notes_.empty()) {
      s += "; " + notes_;
    }
    for (const auto & f : failures_) {
      s += "\n      failed: " + f;
    }
    if (failed_ > failures_.size()) {
      s += "\n      ... " + std::to_string(failed_ - failures_.size()) + " more";
    }
    return s;
  }

private:
  std::size_t checks_{0};
  std::size_t failed_{0};
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string fmt(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string scratch(const std::string & name)
{
  const fs::path p = fs::temp_directory_path() / "mapchange_acceptance" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

int cli(std::vector<std::string> args, std::string * err = nullptr)
{
  args.insert(args.begin(), "mapchange");
  std::vector<const char *> argv;
  for (const auto & a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream e;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, e);
  if (err != nullptr) {
    *err = e.str();
  }
  return code;
}

std::map<std::string, std::string> snapshot(const std::string & dir)
{
  std::map<std::string, std::string> out;
  for (const auto & e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) {
      out[fs::relative(e.path(), dir).string()] = read_text_file(e.path().string());
    }
  }
  return out;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

// Checks the macc identity on every accuracy row of a report.
std::size_t check_report_macc(const EvalReport & report, Check & c)
{
  std::size_t rows = 0;
  for (const auto & block : report.strategies) {
    for (const auto & row : block.rows) {
      std::optional<double> p;
      std::optional<double> n;
      std::optional<double> m;
      bool has_macc = false;
      for (const auto & v : row.values) {
        if (v.name == "acc_pos") {
          p = v.value;
        } else if (v.name == "acc_neg") {
          n = v.value;
        } else if (v.name == "macc") {
          m = v.value;
          has_macc = true;
        }
      }
      if (!has_macc) {
        continue;
      }
      const std::string where = "(" + block.key + ") " + row.change_class + " " + row.parameter_name;
      if (p && n) {
        ++rows;
        c.expect(m.has_value(), where + ": macc undefined");
        if (m) {
          const double mean = (*p + *n) / 2.0;
          c.expect(std::abs(*m - mean) <= 1e-12, where + ": macc != mean");
          c.expect(std::abs(mean - round2(*m)) <= 0.005 + 1e-9, where + ": rounded macc off");
        }
      } else {
        c.expect(!m.has_value(), where + ": macc defined without both accuracies");
      }
    }
  }
  return rows;
}

NoiseConfig realistic_noise(std::uint64_t seed)
{
  NoiseConfig n;
  n.miss_rate = 0.1;
  n.clutter_rate = 1.0;
  n.jitter_sigma = 0.25;
  n.flag_flip_rate = 0.3;
  n.false_alarm_rate = 0.05;
  n.rng_seed = seed;
  return n;
}

DatasetSpec synthetic_spec(std::uint64_t seed, const NoiseConfig & noise)
{
  DatasetSpec spec;
  spec.n_sequences = 4;
  spec.frames_per_sequence = 12;
  spec.perturbation.deletion_probability = 0.3;
  spec.perturbation.insertion_rate = 0.5;
  spec.noise = noise;
  spec.seed = seed;
  return spec;
}

// ---------------------------------------------------------------------------

void criterion_1(Check & c)
{
  const auto t0 = std::chrono::steady_clock::now();
  const Dataset ds = build_paper_stats_dataset(NoiseConfig::identity());
  const EvalReport report = evaluate_all(ds);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const Manifest m = make_manifest(ds);
  std::size_t changed = 0;
  for (const auto & s : ds.sequences) {
    changed += s.has_change() ? 1 : 0;
  }
  c.expect(ds.sequences.size() == 37 && changed == 33, "expected 33 changed + 4 unchanged sequences");
  c.expect(m.frames() == 3800, "expected 3800 frames, got " + std::to_string(m.frames()));
  c.expect(report.strategies.size() == 9, "expected 9 strategy blocks");

  std::size_t defined = 0;
  std::size_t undefined = 0;
  for (const auto & block : report.strategies) {
    c.expect(block.error.empty(), "(" + block.key + ") error: " + block.error);
    for (const auto & row : block.rows) {
      for (const auto & v : row.values) {
        if (v.value) {
          ++defined;
          c.expect(*v.value == 1.0, "(" + block.key + ") " + v.name + " = " + fmt(*v.value));
        } else {
          ++undefined;
          c.expect(!v.reason.empty(), "(" + block.key + ") " + v.name + " undefined without reason");
        }
      }
    }
  }
  c.expect(validate_report_json(report_to_json(report)).empty(), "report fails validation");
  c.expect(secs < 60.0, "wall clock " + fmt(secs) + " s");
  c.note(
    std::to_string(ds.sequences.size()) + " sequences, " + std::to_string(m.frames()) + " frames, " +
    std::to_string(defined) + " values = 1.0, " + std::to_string(undefined) + " undefined, " + fmt(secs) + " s");
}

void criterion_2(Check & c)
{
  struct Row
  {
    double pos;
    double neg;
    double printed;
  };
  const std::vector<Row> table{
    {0.52, 0.87, 0.70}, {0.43, 0.93, 0.68}, {0.37, 0.97, 0.67},  // (a)
    {0.94, 0.00, 0.47}, {0.94, 0.25, 0.60}, {0.94, 0.75, 0.84},  // (b)
    {0.87, 0.86, 0.86}, {0.79, 0.93, 0.86}, {0.68, 0.97, 0.83},  // (c) insertions
    {0.12, 0.99, 0.56}, {0.11, 0.99, 0.55}, {0.11, 0.99, 0.55},  // (c) deletions
    {0.93, 0.05, 0.49}, {0.93, 0.18, 0.56}, {0.93, 0.45, 0.69},  // (d) insertions
    {0.47, 0.83, 0.65}, {0.42, 0.83, 0.63}, {0.42, 0.83, 0.63},  // (d) deletions
  };
  for (const auto & r : table) {
    ChangeAccuracy acc;
    acc.positive = {static_cast<std::size_t>(std::lround(r.pos * 100)), 100};
    acc.negative = {static_cast<std::size_t>(std::lround(r.neg * 100)), 100};
    const double mean = (r.pos + r.neg) / 2.0;
    c.expect(std::abs(mean - r.printed) <= 0.005 + 1e-9, "row (" + fmt(r.pos) + ", " + fmt(r.neg) + ")");
    c.expect(acc.macc() && std::abs(*acc.macc() - mean) <= 1e-12, "ChangeAccuracy::macc on fixture row");
  }

  std::size_t rows = 0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Dataset ds = build_synthetic_dataset(synthetic_spec(seed, realistic_noise(seed + 100)));
    const EvalReport report = evaluate_all(ds);
    rows += check_report_macc(report, c);
    c.expect(validate_report_json(report_to_json(report)).empty(), "noisy report fails validation");
  }
  c.expect(rows > 0, "no accuracy rows with both values defined");
  c.note(std::to_string(table.size()) + " published rows, " + std::to_string(rows) + " rows of our own reports");
}

void criterion_3(Check & c)
{
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(0, 6);
  std::uniform_int_distribution<int> eighths(0, 80);
  std::bernoulli_distribution inf(0.2);
  std::size_t with_inf = 0;
  const int n = 2000;
  for (int t = 0; t < n; ++t) {
    CostMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
    bool any_inf = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        // Multiples of 1/8: every partial sum is exact, so equality is exact.
        const bool is_inf = inf(rng);
        any_inf |= is_inf;
        rows[r][k] = m(r, k) = is_inf ? kInfeasible : eighths(rng) / 8.0;
      }
    }
    with_inf += any_inf ? 1 : 0;
    const Assignment a = hungarian_assign(m);
    const oracle::BruteAssignment want = oracle::assignment(rows);
    const std::string id = "matrix " + std::to_string(t) + " (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")";
    c.expect(a.pairs.size() == want.matched, id + ": cardinality");
    c.expect(a.total_cost() == want.cost, id + ": cost " + fmt(a.total_cost()) + " vs " + fmt(want.cost));
  }
  c.note(std::to_string(n) + " matrices up to 6x6, " + std::to_string(with_inf) + " with +inf entries");
}

void criterion_4(Check & c)
{
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-10, 10);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> shift(-100, 100);
  auto points = [&](std::size_t n) {
    std::vector<Point2> out(n);
    for (auto & p : out) {
      p = {u(rng), u(rng)};
    }
    return out;
  };
  std::size_t frechet_cases = 0;
  for (std::size_t np = 1; np <= 6; ++np) {
    for (std::size_t nq = 1; nq <= 6; ++nq) {
      for (int t = 0; t < 20; ++t) {
        const auto p = points(np);
        const auto q = points(nq);
        ++frechet_cases;
        c.expect(frechet_distance(p, q) == oracle::frechet(p, q), "frechet vs coupling enumeration");
        c.expect(chamfer_distance(p, q) == oracle::chamfer(p, q), "chamfer vs nearest-neighbour oracle");
      }
    }
  }
  for (int t = 0; t < 500; ++t) {
    const auto p = points(1 + static_cast<std::size_t>(t % 10));
    const auto q = points(1 + static_cast<std::size_t>((t / 10) % 10));
    c.expect(chamfer_distance(p, q) == oracle::chamfer(p, q), "chamfer vs oracle (larger sets)");
    const RigidTransform m{ang(rng), shift(rng), shift(rng)};
    const Polyline mp = m.apply(Polyline(p));
    const Polyline mq = m.apply(Polyline(q));
    c.expect(std::abs(chamfer_distance(p, q) - chamfer_distance(mp, mq)) <= 1e-9, "chamfer rigid invariance");
    c.expect(std::abs(frechet_distance(p, q) - frechet_distance(mp, mq)) <= 1e-9, "frechet rigid invariance");
  }
  c.note(std::to_string(frechet_cases) + " fixtures with <= 6 points, 500 rigid motions");
}

void criterion_5(Check & c)
{
  auto rect = [](const oracle::Rect & r) {
    return Polygon{{{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}}};
  };
  const oracle::Rect a{0, 0, 1, 1};
  const oracle::Rect b{0.5, 0, 1.5, 1};
  const double third = polygon_iou(rect(a), rect(b), 0.05);
  c.expect(std::abs(third - 1.0 / 3.0) <= 0.02, "1/3 fixture: " + fmt(third));
  c.expect(std::abs(oracle::rect_iou(a, b) - 1.0 / 3.0) <= 1e-12, "oracle 1/3 fixture");

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pos(-3, 3);
  std::uniform_real_distribution<double> size(0.5, 6);
  std::size_t overlapping = 0;
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    oracle::Rect ra{pos(rng), pos(rng), 0, 0};
    ra.x1 = ra.x0 + size(rng);
    ra.y1 = ra.y0 + size(rng);
    oracle::Rect rb{pos(rng), pos(rng), 0, 0};
    rb.x1 = rb.x0 + size(rng);
    rb.y1 = rb.y0 + size(rng);
    const double want = oracle::rect_iou(ra, rb);
    overlapping += want > 0 ? 1 : 0;
    const double got = polygon_iou(rect(ra), rect(rb), 0.05);
    const double serial = polygon_iou(rect(ra), rect(rb), 0.05, ExecutionPolicy::Serial);
    worst = std::max(worst, std::abs(got - want));
    c.expect(std::abs(got - want) <= 0.02, "pair " + std::to_string(t) + ": " + fmt(got) + " vs " + fmt(want));
    c.expect(got == serial, "serial/parallel raster disagree");
  }
  c.expect(overlapping >= 50, "only " + std::to_string(overlapping) + " overlapping pairs");
  c.note("200 pairs (" + std::to_string(overlapping) + " overlapping), max error " + fmt(worst));
}

FrameRecord single_crossing_frame(const std::string & id)
{
  FrameRecord f;
  f.ground_truth.frame_id = id;
  f.prediction.frame_id = id;
  f.stale.frame_id = id;
  const LaneSegment cross = support::crossing("c", 0, 4, -3, 3);
  f.ground_truth.elements.push_back({cross, ChangeLabel::Inserted});
  return f;
}

void criterion_6(Check & c)
{
  std::mt19937_64 rng(6);
  std::bernoulli_distribution coin(0.5);
  std::size_t fixtures = 0;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (int t = 0; t < 200; ++t) {
      std::vector<bool> flags(n);
      bool raw[10] = {};
      std::size_t tp = 0;
      for (std::size_t k = 0; k < n; ++k) {
        flags[k] = raw[k] = coin(rng);
        tp += flags[k] ? 1 : 0;
      }
      const std::size_t gt = std::max<std::size_t>(1, tp + static_cast<std::size_t>(t % 4));
      ++fixtures;
      const double got = average_precision(std::span<const bool>(raw, n), gt);
      c.expect(std::abs(got - oracle::average_precision(flags, gt)) <= 1e-12, "AP vs PR-curve oracle");
    }
  }

  // Rank swap: a correct detection and a 10 m offset one, scores exchanged.
  for (const bool good_first : {true, false}) {
    FrameRecord f = single_crossing_frame("swap");
    const LaneSegment & g = f.ground_truth.elements[0].element;
    f.prediction.elements.push_back(support::predicted(g, ChangeLabel::Inserted, good_first ? 0.9 : 0.6));
    f.prediction.elements.push_back(
      support::predicted(support::translated(g, 10, 0), ChangeLabel::Inserted, good_first ? 0.6 : 0.9));
    Dataset ds;
    ds.sequences.push_back({"s", {f}});
    const ClassAp ap = changed_element_ap(ds, ChangeFilter::Any, EvalConfig{});
    const double want = good_first ? 1.0 : 0.5;
    c.expect(ap.crossing.ap && *ap.crossing.ap == want, std::string("rank swap ") + (good_first ? "good first" : "bad first"));
    c.expect(oracle::average_precision({good_first, !good_first}, 1) == want, "rank swap oracle");
  }
  c.note(std::to_string(fixtures) + " ranked fixtures with <= 10 predictions, rank swap 1.0 / 0.5");
}

void criterion_7(Check & c)
{
  const std::vector<double> eps{0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  Ratio pooled;
  std::size_t monotone_runs = 0;
  auto check_monotone = [&](const Dataset & ds, const std::string & tag) {
    std::optional<double> prev;
    bool ok = true;
    for (const double e : eps) {
      const auto v = sf_change_accuracy(ds, e).acc_neg();
      if (v && prev && *v < *prev) {
        ok = false;
      }
      if (v) {
        prev = v;
      }
    }
    ++monotone_runs;
    c.expect(ok, tag + ": acc_neg decreases with epsilon");
  };

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    NoiseConfig flip = NoiseConfig::identity(1000 + seed);
    flip.flag_flip_rate = 0.3;
    flip.score_true.constant = 1.0;
    const Dataset ds = build_synthetic_dataset(synthetic_spec(seed, flip));
    Dataset single;
    Sequence seq{"single", {}};
    for (const auto & s : ds.sequences) {
      for (const auto & f : s.frames) {
        const auto & gt = f.ground_truth;
        if (gt.count(ChangeLabel::Inserted) + gt.count(ChangeLabel::Deleted) == 1) {
          seq.frames.push_back(f);
        }
      }
    }
    single.sequences.push_back(seq);
    pooled += sf_change_accuracy(single, 0.2).positive;
    check_monotone(ds, "flip seed " + std::to_string(seed));

    const Dataset noisy = build_synthetic_dataset(synthetic_spec(seed, realistic_noise(2000 + seed)));
    check_monotone(noisy, "realistic seed " + std::to_string(seed));
  }
  const double n = static_cast<double>(pooled.total);
  const double rate = pooled.value().value_or(-1.0);
  const double sigma = std::sqrt(0.7 * 0.3 / n);
  c.expect(pooled.total >= 200, "too few single-change frames: " + std::to_string(pooled.total));
  c.expect(std::abs(rate - 0.7) <= 3.0 * sigma, "pooled acc_pos " + fmt(rate) + ", 3 sigma = " + fmt(3 * sigma));
  c.note(
    "pooled acc_pos " + fmt(rate) + " over " + std::to_string(pooled.total) + " single-change frames (0.7 +/- " +
    fmt(3 * sigma) + "), " + std::to_string(monotone_runs) + " monotone runs");
}

void criterion_8(Check & c)
{
  std::vector<LocalMap> worlds{
    load_map(read_text_file(support::fixture("road.json"))),
    load_map(read_text_file(support::fixture("curve.json")))};
  for (std::uint64_t s = 0; s < 4; ++s) {
    worlds.push_back(generate_world(WorldParams{}, -40.0, 40.0, 70 + s));
  }
  std::vector<PerturbationConfig> configs;
  for (const double p : {0.0, 0.3, 0.7, 1.0}) {
    for (const double rate : {0.0, 0.5, 2.0}) {
      PerturbationConfig cfg;
      cfg.deletion_probability = p;
      cfg.insertion_rate = rate;
      configs.push_back(cfg);
    }
  }
  PerturbationConfig exact;
  exact.exact_removals = 1;
  exact.exact_additions = 2;
  configs.push_back(exact);
  PerturbationConfig ratio;
  ratio.target_ratio = 2.0;
  ratio.insertion_rate = 1.0;
  configs.push_back(ratio);

  std::size_t frames = 0;
  for (std::size_t w = 0; w < worlds.size(); ++w) {
    const LocalMap & world = worlds[w];
    std::size_t crossings = 0;
    for (const auto & e : world.elements) {
      crossings += e.element_class == ElementClass::PedestrianCrossing ? 1 : 0;
    }
    for (std::size_t k = 0; k < configs.size(); ++k) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        PerturbationConfig cfg = configs[k];
        cfg.rng_seed = seed;
        for (const auto mode : {PerturbationMode::Insertions, PerturbationMode::Deletions, PerturbationMode::Mixed}) {
          const SynthesisResult r = perturb(world, mode, cfg);
          ++frames;
          const std::string id = "world " + std::to_string(w) + " config " + std::to_string(k) + " seed " + std::to_string(seed);
          c.expect(
            r.stale.elements.size() + r.gt.count(ChangeLabel::Inserted) - r.gt.count(ChangeLabel::Deleted) ==
              world.elements.size(),
            id + ": bookkeeping");
          c.expect(validate_map(r.stale).empty(), id + ": stale map invalid");
        }
        if (cfg.exact_removals || cfg.target_ratio) {
          continue;
        }
        const SynthesisResult ins = make_insertion_examples(world, cfg);
        if (cfg.deletion_probability == 0.0) {
          c.expect(ins.gt.count(ChangeLabel::Inserted) == 0, "p=0 removed a crossing");
          c.expect(ins.stale == world, "p=0 changed the stale map");
        } else if (cfg.deletion_probability == 1.0) {
          c.expect(ins.gt.count(ChangeLabel::Inserted) == crossings, "p=1 kept a crossing");
          c.expect(
            std::none_of(ins.stale.elements.begin(), ins.stale.elements.end(),
                         [](const LaneSegment & e) { return e.element_class == ElementClass::PedestrianCrossing; }),
            "p=1 stale map still has crossings");
        }
      }
    }
  }
  c.note(std::to_string(frames) + " perturbed frames over " + std::to_string(worlds.size()) + " worlds");
}

void criterion_9(Check & c)
{
  std::vector<LocalMap> maps{
    load_map(read_text_file(support::fixture("road.json"))),
    load_map(read_text_file(support::fixture("curve.json"))), LocalMap{}};
  for (std::uint64_t s = 0; s < 5; ++s) {
    maps.push_back(generate_world(WorldParams{}, -60.0, 60.0, 90 + s));
  }
  const Dataset ds = build_synthetic_dataset(synthetic_spec(9, NoiseConfig::identity()));
  for (const auto & f : ds.sequences[0].frames) {
    maps.push_back(f.stale);
  }
  std::size_t rows = 0;
  for (const auto & m : maps) {
    const PriorEncoding enc = encode_prior(m);
    c.expect(enc.cols() == 486, "columns " + std::to_string(enc.cols()));
    c.expect(enc.rows() == m.elements.size(), "rows != elements");
    for (std::size_t r = 0; r < enc.rows(); ++r) {
      ++rows;
      const auto row = enc.row(r);
      for (const std::size_t base : {std::size_t{480}, std::size_t{483}}) {
        double sum = 0;
        bool binary = true;
        for (std::size_t k = 0; k < 3; ++k) {
          sum += row[base + k];
          binary &= row[base + k] == 0.0 || row[base + k] == 1.0;
        }
        c.expect(sum == 1.0 && binary, "one-hot block at column " + std::to_string(base));
      }
    }
  }
  c.note(std::to_string(maps.size()) + " maps, " + std::to_string(rows) + " rows x 486 columns");
}

void criterion_10(Check & c)
{
  const std::string root = scratch("determinism");
  std::map<std::string, std::string> previous;
  std::string err;
  for (const char * run : {"a", "b"}) {
    const std::string dir = root + "/" + run;
    const std::vector<std::vector<std::string>> steps{
      {"simulate", "--preset", "synthetic", "--sequences", "3", "--frames", "5", "--noise",
       support::fixture("noise.json"), "--perturbation", support::fixture("perturbation.json"), "--seed", "7",
       "--out", dir + "/data"},
      {"evaluate", "--dataset", dir + "/data", "--config", support::fixture("eval_config.json"), "--out",
       dir + "/report.json", "--markdown", dir + "/report.md"},
      {"evaluate", "--dataset", dir + "/data", "--config", support::fixture("eval_config.json"), "--out",
       dir + "/report_serial.json", "--serial"},
      {"perturb", "--world", support::fixture("curve.json"), "--mode", "mixed", "--seed", "3", "--out",
       dir + "/perturbed"},
      {"render", "--input", dir + "/perturbed/gt.json", "--out", dir + "/gt.svg"},
      {"encode", "--map", support::fixture("road.json"), "--out", dir + "/enc.csv"},
      {"encode", "--map", support::fixture("road.json"), "--format", "bin", "--out", dir + "/enc.bin"},
    };
    for (const auto & step : steps) {
      const int code = cli(step, &err);
      c.expect(code == kExitOk, step[0] + " exited " + std::to_string(code) + ": " + err);
    }
    const auto snap = snapshot(dir);
    if (!previous.empty()) {
      c.expect(snap == previous, "second run differs from the first");
    }
    c.expect(
      snap.count("report.json") != 0 && snap.at("report.json") == snap.at("report_serial.json"),
      "serial and parallel reports differ");
    previous = snap;
  }

  std::size_t round_trips = 0;
  for (const char * name : {"road.json", "curve.json"}) {
    const LocalMap m = load_map(read_text_file(support::fixture(name)));
    const std::string saved = save_map(m);
    c.expect(load_map(saved) == m, std::string(name) + ": load(save(m)) != m");
    c.expect(save_map(load_map(saved)) == saved, std::string(name) + ": save(load(text)) != text");
    ++round_trips;
  }
  {
    const Json doc = parse_json(read_text_file(support::fixture("eval_config.json")));
    const Json once = to_json(eval_config_from_json(doc));
    c.expect(dump_json(to_json(eval_config_from_json(once))) == dump_json(once), "eval config round trip");
    const Json noise = to_json(noise_config_from_json(parse_json(read_text_file(support::fixture("noise.json")))));
    c.expect(dump_json(to_json(noise_config_from_json(noise))) == dump_json(noise), "noise config round trip");
    const Json pert =
      to_json(perturbation_config_from_json(parse_json(read_text_file(support::fixture("perturbation.json")))));
    c.expect(dump_json(to_json(perturbation_config_from_json(pert))) == dump_json(pert), "perturbation round trip");
    round_trips += 3;
  }
  const Dataset ds = load_dataset(root + "/a/data");
  const std::string copy = scratch("roundtrip");
  save_dataset(ds, copy);
  c.expect(load_dataset(copy) == ds, "dataset load(save(d)) != d");
  c.expect(snapshot(copy) == snapshot(root + "/a/data"), "dataset save(load(dir)) differs byte-wise");
  for (const auto & s : ds.sequences) {
    for (const auto & f : s.frames) {
      c.expect(load_ground_truth(save_ground_truth(f.ground_truth)) == f.ground_truth, "gt frame round trip");
      c.expect(load_prediction(save_prediction(f.prediction)) == f.prediction, "prediction frame round trip");
      ++round_trips;
    }
  }
  c.note(std::to_string(previous.size()) + " CLI output files identical across runs, " + std::to_string(round_trips) + " round trips");
}

}  // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria{
    {"identity end-to-end on the paper-stats dataset", criterion_1},
    {"mAcc identity on published rows and own reports", criterion_2},
    {"Hungarian optimality vs brute force", criterion_3},
    {"geometry oracles and rigid invariance", criterion_4},
    {"rasterized IoU accuracy", criterion_5},
    {"AP vs brute-force PR curve", criterion_6},
    {"statistical noise response", criterion_7},
    {"perturbation bookkeeping", criterion_8},
    {"prior encoding shape", criterion_9},
    {"determinism and round trip", criterion_10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception & e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    failed += c.ok() ? 0 : 1;
    std::printf("%s [%zu] %s: %s\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), c.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
