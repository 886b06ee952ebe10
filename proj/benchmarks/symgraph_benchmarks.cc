// Copyright 2026 The SymGraph Authors
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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "symgraph/dataset.h"
#include "symgraph/metrics.h"
#include "symgraph/oracle.h"
#include "symgraph/raster.h"
#include "symgraph/sample.h"

namespace symgraph {
namespace {

constexpr int kPool = 64;

std::vector<Layout> Pool(LayoutClass c) {
  std::vector<Layout> out;
  for (int i = 0; i < kPool; ++i) {
    out.push_back(GenerateSample(c, DeriveSeed(1, i), i).layout);
  }
  return out;
}

void BM_GenerateSample(benchmark::State& state) {
  const auto c = static_cast<LayoutClass>(state.range(0));
  std::int64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(GenerateSample(c, DeriveSeed(2, i), i));
    ++i;
  }
  state.SetLabel(std::string(LayoutClassName(c)));
}
BENCHMARK(BM_GenerateSample)->DenseRange(0, 7);

void BM_PurchaseScore(benchmark::State& state) {
  const auto layouts = Pool(static_cast<LayoutClass>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(PurchaseStyleScore(layouts[i++ % kPool]));
  }
}
BENCHMARK(BM_PurchaseScore)
    ->Arg(static_cast<int>(LayoutClass::kSmallSym))
    ->Arg(static_cast<int>(LayoutClass::kReflectionalLarge));

void BM_KlapaukhScore(benchmark::State& state) {
  const auto layouts = Pool(static_cast<LayoutClass>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(KlapaukhStyleScore(layouts[i++ % kPool]));
  }
}
BENCHMARK(BM_KlapaukhScore)
    ->Arg(static_cast<int>(LayoutClass::kSmallSym))
    ->Arg(static_cast<int>(LayoutClass::kReflectionalLarge));

void BM_MirrorOracle(benchmark::State& state) {
  const auto layouts = Pool(LayoutClass::kNonSymLarge);
  std::size_t i = 0;
  for (auto _ : state) {
    const Layout& l = layouts[i++ % kPool];
    benchmark::DoNotOptimize(
        ExactMirrorOracle(l, 0.02 * BoundsOf(l.positions).diagonal()));
  }
}
BENCHMARK(BM_MirrorOracle);

void BM_Rasterize(benchmark::State& state) {
  const auto layouts = Pool(LayoutClass::kReflectionalLarge);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Rasterize(layouts[i++ % kPool]));
  }
}
BENCHMARK(BM_Rasterize);

void BM_EncodePng(benchmark::State& state) {
  const RasterImage image =
      Rasterize(GenerateSample(LayoutClass::kRotationalLarge, 3, 0).layout);
  for (auto _ : state) benchmark::DoNotOptimize(EncodePng(image));
}
BENCHMARK(BM_EncodePng);

void BM_BuildSample(benchmark::State& state) {
  const Recipe recipe = GetRecipe("LHVRT", 0.01);
  std::int64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildSample(recipe, 5, i++ % recipe.total()));
  }
}
BENCHMARK(BM_BuildSample);

}  // namespace
}  // namespace symgraph

BENCHMARK_MAIN();
