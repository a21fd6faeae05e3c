// Copyright 2026 The srdiff Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts, plus the two
// end-to-end per-image scores. Run with OMP_NUM_THREADS to vary the pool.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "srdiff/difficulty.hpp"
#include "srdiff/kernels.hpp"
#include "srdiff/metrics.hpp"
#include "srdiff/wavelet.hpp"

namespace {

using srdiff::RealMatrix;
namespace k = srdiff::kernels;

RealMatrix random_matrix(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(16.0, 235.0);
  RealMatrix m(w, h);
  for (double& v : m.samples()) v = u(rng);
  return m;
}

constexpr bool kSerial = true;
constexpr bool kParallel = false;

template <bool Serial>
void BM_AnalyzeRows(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealMatrix in = random_matrix(n, n, 1);
  const auto& f = srdiff::sym19_filters();
  const std::size_t m = k::analysis_length(n, f.lowpass.size());
  RealMatrix lo(m, n), hi(m, n);
  for (auto _ : state) {
    if constexpr (Serial) {
      k::serial::analyze_rows(in, f.lowpass, f.highpass, lo, hi);
    } else {
      k::analyze_rows(in, f.lowpass, f.highpass, lo, hi);
    }
    benchmark::DoNotOptimize(lo.samples().data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

template <bool Serial>
void BM_AnalyzeColumns(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealMatrix in = random_matrix(n, n, 2);
  const auto& f = srdiff::sym19_filters();
  const std::size_t m = k::analysis_length(n, f.lowpass.size());
  RealMatrix lo(n, m), hi(n, m);
  for (auto _ : state) {
    if constexpr (Serial) {
      k::serial::analyze_columns(in, f.lowpass, f.highpass, lo, hi);
    } else {
      k::analyze_columns(in, f.lowpass, f.highpass, lo, hi);
    }
    benchmark::DoNotOptimize(lo.samples().data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

template <bool Serial>
void BM_RotateWindow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealMatrix in = random_matrix(n, n, 3);
  RealMatrix out(n * 7 / 10, n * 7 / 10);
  const double theta = 40.0 * std::numbers::pi / 180.0;
  for (auto _ : state) {
    if constexpr (Serial) {
      k::serial::rotate_window(in, theta, out);
    } else {
      k::rotate_window(in, theta, out);
    }
    benchmark::DoNotOptimize(out.samples().data());
  }
  state.SetItemsProcessed(state.iterations() * out.size());
}

template <bool Serial>
void BM_SquaredError(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealMatrix a = random_matrix(n, n, 4);
  const RealMatrix b = random_matrix(n, n, 5);
  RealMatrix out(n, n);
  for (auto _ : state) {
    if constexpr (Serial) {
      k::serial::squared_error(a, b, out);
      benchmark::DoNotOptimize(k::serial::sum(out));
    } else {
      k::squared_error(a, b, out);
      benchmark::DoNotOptimize(k::sum(out));
    }
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

template <bool Serial>
void BM_BilinearResize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealMatrix in = random_matrix(n / 2, n / 2, 6);
  RealMatrix out(n, n);
  for (auto _ : state) {
    if constexpr (Serial) {
      k::serial::bilinear_resize(in, out);
    } else {
      k::bilinear_resize(in, out);
    }
    benchmark::DoNotOptimize(out.samples().data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_Psnr99(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealMatrix a = random_matrix(n, n, 7);
  const RealMatrix b = random_matrix(n, n, 8);
  const srdiff::LumaPlane hr(n, n, a.vector());
  const srdiff::LumaPlane sr(n, n, b.vector());
  for (auto _ : state) benchmark::DoNotOptimize(srdiff::psnr99(hr, sr).value.db);
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_Riei(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealMatrix a = random_matrix(n, n, 9);
  const srdiff::LumaPlane p(n, n, a.vector());
  for (auto _ : state) benchmark::DoNotOptimize(srdiff::compute_riei(p).riei);
  state.SetItemsProcessed(state.iterations() * n * n);
}

#define SRDIFF_PAIR(fn)                                                         \
  BENCHMARK_TEMPLATE(fn, kSerial)->Name(#fn "/serial")->RangeMultiplier(2)->Range(128, 1024); \
  BENCHMARK_TEMPLATE(fn, kParallel)->Name(#fn "/omp")->RangeMultiplier(2)->Range(128, 1024)

SRDIFF_PAIR(BM_AnalyzeRows);
SRDIFF_PAIR(BM_AnalyzeColumns);
SRDIFF_PAIR(BM_RotateWindow);
SRDIFF_PAIR(BM_SquaredError);
SRDIFF_PAIR(BM_BilinearResize);
BENCHMARK(BM_Psnr99)->RangeMultiplier(2)->Range(128, 1024);
BENCHMARK(BM_Riei)->RangeMultiplier(2)->Range(128, 512);

}  // namespace

BENCHMARK_MAIN();
