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

#include "symgraph/sample.h"

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symgraph/error.h"
#include "symgraph/oracle.h"

namespace symgraph {

namespace {

// Attempts per sample before giving up; each attempt redraws sizes.
constexpr int kSampleAttempts = 100;

constexpr int kSmallMin = 5;
constexpr int kSmallMax = 8;
constexpr int kLargeMin = 10;
constexpr int kLargeMax = 20;

constexpr EdgeFeature kPresetRandom[] = {EdgeFeature::kRandomAny};
constexpr EdgeFeature kPresetCrossing[] = {EdgeFeature::kCrossing,
                                           EdgeFeature::kRandomNonCrossing};
constexpr EdgeFeature kPresetMixed[] = {EdgeFeature::kParallel,
                                        EdgeFeature::kCrossing,
                                        EdgeFeature::kRandomNonCrossing};
// Crossing decoys need vertices that are not touched by crossing edges.
constexpr EdgeFeature kPresetCrossingDecoy[] = {
    EdgeFeature::kCrossing, EdgeFeature::kRandomNonCrossing,
    EdgeFeature::kRandomNonCrossing};

int MaxEdges(int n) { return n * 6 / 5; }

template <typename F>
auto WithRetries(F&& build) -> decltype(build()) {
  for (int attempt = 1;; ++attempt) {
    try {
      return build();
    } catch (const Error& e) {
      const bool retryable = e.code() == ErrorCode::kGenerationInfeasible ||
                             e.code() == ErrorCode::kGenerationRetryExhausted;
      if (!retryable || attempt >= kSampleAttempts) throw;
    }
  }
}

std::span<const EdgeFeature> DrawPreset(Rng& rng) {
  switch (UniformInt(rng, 0, 2)) {
    case 0:
      return kPresetRandom;
    case 1:
      return kPresetCrossing;
    default:
      return kPresetMixed;
  }
}

Graph DrawSymGGGraph(int n, std::span<const EdgeFeature> features, Rng& rng) {
  return WithRetries([&] {
    const int m = UniformInt(rng, n, MaxEdges(n));
    return GenerateSymmetricGraph(n, m, features, rng);
  });
}

struct HalfParts {
  Graph half;
  int connect_count = 0;
};

// Splits a total edge budget m in [n, floor(1.2 n)] for n = 2c into
// 2 * m_half component edges plus k connecting edges, k in [1, floor(n/3)].
HalfParts DrawHalfParts(int c, Rng& rng) {
  const int n = 2 * c;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const int m = UniformInt(rng, n, MaxEdges(n));
    std::vector<int> ks;
    for (int k = 1; k <= n / 3; ++k) {
      if ((m - k) % 2 != 0) continue;
      const int m_half = (m - k) / 2;
      if (m_half >= c - 1 && m_half <= c * (c - 1) / 2) ks.push_back(k);
    }
    if (ks.empty()) continue;
    const int k = ks[UniformInt(rng, 0, static_cast<int>(ks.size()) - 1)];
    return {GenerateComponentGraph(c, (m - k) / 2, rng), k};
  }
  throw Error(ErrorCode::kGenerationInfeasible,
              "no edge split for half size " + std::to_string(c));
}

struct Built {
  Layout layout;
  std::string variant;
  int connecting_edges = -1;
  int rotation_order = 0;
};

Built BuildParallelLines(int c, LayoutClass label, Rng& rng) {
  HalfParts parts = DrawHalfParts(c, rng);
  return {LayoutParallelLines(parts.half, parts.connect_count, rng, label),
          "parallel-lines", parts.connect_count, 0};
}

Built BuildSymGG(int n, std::span<const EdgeFeature> features,
                 LayoutClass label, Rng& rng) {
  Graph graph = DrawSymGGGraph(n, features, rng);
  return {LayoutReflectionalMirror(graph, rng, label), "symgg", -1, 0};
}

Built BuildLargeReflective(LayoutClass label, Rng& rng) {
  if (UniformInt(rng, 0, 1) == 0) {
    return BuildParallelLines(UniformInt(rng, kLargeMin / 2, kLargeMax / 2),
                              label, rng);
  }
  return BuildSymGG(UniformInt(rng, kLargeMin, kLargeMax), DrawPreset(rng),
                    label, rng);
}

Built BuildSmallSym(std::int64_t variant_index, Rng& rng) {
  if (variant_index % 2 == 0) {
    return BuildParallelLines(UniformInt(rng, 3, 4), LayoutClass::kSmallSym,
                              rng);
  }
  return BuildSymGG(UniformInt(rng, kSmallMin, kSmallMax), DrawPreset(rng),
                    LayoutClass::kSmallSym, rng);
}

Built BuildSmallNonSym(std::int64_t variant_index, Rng& rng) {
  constexpr LayoutClass kLabel = LayoutClass::kSmallNonSym;
  switch (variant_index % 3) {
    case 0: {
      Built base = BuildSmallSym(UniformInt(rng, 0, 1), rng);
      return {LayoutNonSymRandom(base.layout.graph, rng, kLabel), "random", -1,
              0};
    }
    case 1: {
      Built base = BuildParallelLines(UniformInt(rng, 3, 4), kLabel, rng);
      return {LayoutNonSymFeature(base.layout, DecoyFeature::kParallelLines,
                                  rng, kLabel),
              "decoy-parallel-lines", base.connecting_edges, 0};
    }
    default: {
      Built base = BuildSymGG(UniformInt(rng, kSmallMin, kSmallMax),
                              kPresetCrossingDecoy, kLabel, rng);
      return {LayoutNonSymFeature(base.layout, DecoyFeature::kCrossings, rng,
                                  kLabel),
              "decoy-crossings", -1, 0};
    }
  }
}

Built BuildRotational(Rng& rng) {
  const int axes = UniformInt(rng, 4, 10);
  // Component sizes from 6 keep both the total edge count within
  // floor(1.2 |V|) and the 2 * axes connecting edges within floor(|V| / 3).
  const int c = UniformInt(rng, 6, 8);
  const int total_max = (axes * c * 6 / 5 - 2 * axes) / axes;
  const int m_c =
      UniformInt(rng, c - 1, std::min(c * (c - 1) / 2, total_max));
  const Graph component = GenerateComponentGraph(c, m_c, rng);
  RotationalLayout r = LayoutRotational(component, axes, rng);
  return {std::move(r.layout), "rotational", 2 * axes, axes};
}

Built BuildTranslational(Rng& rng) {
  HalfParts parts = DrawHalfParts(UniformInt(rng, kLargeMin / 2, kLargeMax / 2),
                                  rng);
  return {LayoutTranslational(parts.half, parts.connect_count, std::nullopt,
                              rng),
          "translational", parts.connect_count, 0};
}

}  // namespace

Sample GenerateSample(LayoutClass label, std::uint64_t seed,
                      std::int64_t variant_index) {
  if (variant_index < 0) ThrowInvalidArgument("negative variant index");
  Rng rng(seed);
  auto random_angle = [&] { return UniformReal(rng, 0.0, 360.0); };

  for (int attempt = 1;; ++attempt) {
    Built built;
    double angle = 0.0;
    switch (label) {
      case LayoutClass::kSmallSym:
        built = WithRetries([&] { return BuildSmallSym(variant_index, rng); });
        angle = random_angle();
        break;
      case LayoutClass::kSmallNonSym:
        built =
            WithRetries([&] { return BuildSmallNonSym(variant_index, rng); });
        angle = random_angle();
        break;
      case LayoutClass::kReflectionalLarge:
        built = WithRetries([&] { return BuildLargeReflective(label, rng); });
        switch (variant_index % 3) {
          case 0:
            angle = 0.0;
            built.variant += "/vertical";
            break;
          case 1:
            angle = 90.0;
            built.variant += "/horizontal";
            break;
          default:
            angle = random_angle();
            built.variant += "/random-axis";
            break;
        }
        break;
      case LayoutClass::kNonSymLarge:
        built = WithRetries([&] {
          Built base = BuildLargeReflective(label, rng);
          base.layout = LayoutNonSymPerturb(base.layout, rng, label);
          base.variant = "perturbed-" + base.variant;
          return base;
        });
        angle = random_angle();
        break;
      case LayoutClass::kHorizontalLarge:
        built = WithRetries([&] { return BuildLargeReflective(label, rng); });
        angle = 90.0;
        break;
      case LayoutClass::kVerticalLarge:
        built = WithRetries([&] { return BuildLargeReflective(label, rng); });
        break;
      case LayoutClass::kRotationalLarge:
        built = WithRetries([&] { return BuildRotational(rng); });
        break;
      case LayoutClass::kTranslationalLarge:
        built = WithRetries([&] { return BuildTranslational(rng); });
        break;
    }

    built.layout.label = label;
    built.layout.seed = seed;
    built.layout.rotation_deg = 0.0;
    Sample sample;
    sample.canonical = built.layout;
    sample.layout = NormalizeLayout(RotateLayout(built.layout, angle));
    // Non-symmetric drawings are checked in their final frame.
    if (!IsSymmetricClass(label)) {
      const double diagonal = BoundsOf(sample.layout.positions).diagonal();
      if (ExactMirrorOracle(sample.layout,
                            kNonSymToleranceFraction * diagonal)) {
        if (attempt >= kSampleAttempts) {
          throw Error(ErrorCode::kGenerationRetryExhausted,
                      "non-symmetric sample stayed mirror-symmetric");
        }
        continue;
      }
    }
    sample.variant = std::move(built.variant);
    sample.connecting_edges = built.connecting_edges;
    sample.rotation_order = built.rotation_order;
    return sample;
  }
}

}  // namespace symgraph
