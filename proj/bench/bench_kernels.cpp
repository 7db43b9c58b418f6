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

// Serial reference path vs OpenMP path for the hot kernels.
// Run with OMP_NUM_THREADS=N to vary the parallel width.

#include <benchmark/benchmark.h>

#include <random>

#include "mapchange/geometry.hpp"
#include "mapchange/matching.hpp"
#include "mapchange/metrics.hpp"
#include "mapchange/simulator.hpp"

using namespace mapchange;

namespace
{

ExecutionPolicy policy_of(const benchmark::State & state)
{
  return state.range(0) == 0 ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
}

void set_label(benchmark::State & state)
{
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

NoiseConfig bench_noise()
{
  NoiseConfig n;
  n.miss_rate = 0.1;
  n.clutter_rate = 1.0;
  n.jitter_sigma = 0.2;
  n.flag_flip_rate = 0.2;
  n.false_alarm_rate = 0.05;
  n.rng_seed = 1;
  return n;
}

DatasetSpec bench_spec()
{
  DatasetSpec spec;
  spec.n_sequences = 8;
  spec.frames_per_sequence = 25;
  spec.perturbation.deletion_probability = 0.3;
  spec.perturbation.insertion_rate = 0.5;
  spec.noise = bench_noise();
  spec.seed = 3;
  return spec;
}

const Dataset & bench_dataset()
{
  static const Dataset ds = build_synthetic_dataset(bench_spec());
  return ds;
}

void BM_PolygonIou(benchmark::State & state)
{
  const Polygon a{{{-20, -3}, {20, -2}, {21, 3}, {-19, 4}}};
  const Polygon b{{{-18, -4}, {22, -3}, {20, 2}, {-20, 3}}};
  const ExecutionPolicy p = policy_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygon_iou(a, b, 0.02, p));
  }
  set_label(state);
}

void BM_CostMatrix(benchmark::State & state)
{
  const FrameRecord & f = bench_dataset().sequences[0].frames[0];
  const ExecutionPolicy p = policy_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cost_matrix(f.prediction, f.ground_truth, p));
  }
  set_label(state);
}

void BM_Hungarian(benchmark::State & state)
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 10);
  CostMatrix c(40, 40);
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t k = 0; k < c.cols(); ++k) {
      c(r, k) = u(rng);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hungarian_assign(c));
  }
}

void BM_EvaluateAll(benchmark::State & state)
{
  const Dataset & ds = bench_dataset();
  const ExecutionPolicy p = policy_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_all(ds, EvalConfig{}, p));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * ds.frame_count()));
  set_label(state);
}

void BM_BuildDataset(benchmark::State & state)
{
  const DatasetSpec spec = bench_spec();
  const ExecutionPolicy p = policy_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_synthetic_dataset(spec, p));
  }
  set_label(state);
}

}  // namespace

BENCHMARK(BM_PolygonIou)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CostMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Hungarian)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EvaluateAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildDataset)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
