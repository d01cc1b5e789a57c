// Copyright 2026 The Plutchik Wheel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "plutchik/emotion_model.hpp"
#include "plutchik/layout.hpp"
#include "plutchik/render.hpp"

namespace {

using namespace plutchik;

std::vector<ScoreSet> random_corpus(std::size_t n, bool triples) {
  std::mt19937 gen(20260418);
  auto draw = [&] { return static_cast<double>(gen()) / 4294967296.0; };
  std::vector<ScoreSet> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (triples) {
      std::vector<IntensityTriple> t(8);
      for (auto& x : t) x = {draw() / 3, draw() / 3, draw() / 3};
      out.push_back(ScoreSet::from_triples(std::move(t)));
    } else {
      std::vector<double> s(8);
      for (auto& x : s) x = draw();
      out.push_back(ScoreSet::from_scalars(ScoreKind::kBasicScalar, std::move(s)));
    }
  }
  return out;
}

void BM_AggregateSerial(benchmark::State& state) {
  const auto corpus = random_corpus(static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(reference::aggregate_corpus(corpus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AggregateParallel(benchmark::State& state) {
  const auto corpus = random_corpus(static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(aggregate_corpus(corpus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RenderWheelsSerial(benchmark::State& state) {
  const auto sets = random_corpus(static_cast<std::size_t>(state.range(0)), true);
  RenderOptions options;
  options.show_coordinates = false;
  for (auto _ : state) benchmark::DoNotOptimize(reference::render_wheels(sets, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RenderWheelsParallel(benchmark::State& state) {
  const auto sets = random_corpus(static_cast<std::size_t>(state.range(0)), true);
  RenderOptions options;
  options.show_coordinates = false;
  for (auto _ : state) benchmark::DoNotOptimize(render_wheels(sets, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_AggregateSerial)->ArgsProduct({{1 << 10, 1 << 16, 1 << 20}, {0, 1}});
BENCHMARK(BM_AggregateParallel)->ArgsProduct({{1 << 10, 1 << 16, 1 << 20}, {0, 1}});
BENCHMARK(BM_RenderWheelsSerial)->Arg(25)->Arg(100);
BENCHMARK(BM_RenderWheelsParallel)->Arg(25)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
