// Copyright 2026 The Homotopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS; on a single core the parallel variants show only
// their scheduling overhead.

#include <random>

#include <benchmark/benchmark.h>

#include "homotopt/descriptions.hpp"
#include "homotopt/kernels.hpp"
#include "homotopt/problems.hpp"

using namespace homotopt;

namespace {

// 100-focal-point ellipse: the expensive case of the grid oracle.
const Description& ellipse() {
  static const Description d = [] {
    std::mt19937_64 rng(11);
    const EllipseInstance e = random_ellipse_instance(100, 2, rng);
    return k_ellipse(e.focal_points, e.r);
  }();
  return d;
}

PointFunction feasibility() {
  return [](const Eigen::VectorXd& x) { return ellipse().value(1.0, x); };
}

PointFunction objective() {
  return [](const Eigen::VectorXd& x) { return 0.6 * x(0) + 0.8 * x(1); };
}

template <class F>
void grid(benchmark::State& state, F kernel) {
  const int res = static_cast<int>(state.range(0));
  const Box2D box{-2.5, 2.5, -2.5, 2.5};
  for (auto _ : state) benchmark::DoNotOptimize(kernel(feasibility(), objective(), box, res));
  state.SetItemsProcessed(state.iterations() * res * res);
}

void BM_GridSerial(benchmark::State& s) { grid(s, grid_argmax_serial); }
void BM_GridParallel(benchmark::State& s) { grid(s, grid_argmax_parallel); }

template <class F>
void rays(benchmark::State& state, F kernel) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel(feasibility(), n, 50.0));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_RaysSerial(benchmark::State& s) { rays(s, boundary_rays_serial); }
void BM_RaysParallel(benchmark::State& s) { rays(s, boundary_rays_parallel); }

template <class F>
void batch(benchmark::State& state, F kernel) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd pts = 3.0 * Eigen::MatrixXd::Random(2, n);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(feasibility(), pts));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_BatchSerial(benchmark::State& s) { batch(s, evaluate_batch_serial); }
void BM_BatchParallel(benchmark::State& s) { batch(s, evaluate_batch_parallel); }

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(201)->Arg(801)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(201)->Arg(801)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RaysSerial)->Arg(720)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RaysParallel)->Arg(720)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
