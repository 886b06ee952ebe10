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


#include <gtest/gtest.h>

#include <vector>

#include "brute_force.h"
#include "symgraph/error.h"
#include "symgraph/graph.h"

namespace symgraph {
namespace {

using testing::AllMirrorClosedEdgeSets;
using testing::BfConnected;
using testing::BfIsNonCrossingEdge;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(MirrorPairingTest, Examples) {
  EXPECT_EQ(MirrorPairing(6).Mirror(1), 4);
  EXPECT_EQ(MirrorPairing(7).Mirror(6), 6);
  EXPECT_EQ(MirrorPairing(6).Mirror(4), 1);
  EXPECT_EQ(MirrorPairing(6).Mirror(MakeEdge(1, 4)), MakeEdge(1, 4));
  EXPECT_EQ(MirrorPairing(6).Mirror(MakeEdge(0, 4)), MakeEdge(1, 3));
}

TEST(MirrorPairingTest, IsInvolution) {
  for (int n = 2; n <= 21; ++n) {
    const MirrorPairing p(n);
    for (int u = 0; u < n; ++u) EXPECT_EQ(p.Mirror(p.Mirror(u)), u);
  }
}

TEST(MirrorPairingTest, OutOfRangeIsInvalid) {
  EXPECT_EQ(CodeOf([] { MirrorPairing(6).Mirror(6); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { MirrorPairing(6).Mirror(-1); }),
            ErrorCode::kInvalidArgument);
}

TEST(GraphTest, RejectsSelfLoopsAndDuplicates) {
  Graph g(3);
  EXPECT_TRUE(g.AddEdge(0, 1));
  EXPECT_FALSE(g.AddEdge(1, 0));
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_EQ(CodeOf([&] { g.AddEdge(2, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { g.AddEdge(0, 3); }), ErrorCode::kInvalidArgument);
  EXPECT_FALSE(g.IsConnected());
  g.AddEdge(1, 2);
  EXPECT_TRUE(g.IsConnected());
}

TEST(SymmetricGraphTest, ParallelFeatureAddsSelfMirroredEdge) {
  const EdgeFeature features[] = {EdgeFeature::kParallel,
                                  EdgeFeature::kRandomNonCrossing};
  const MirrorPairing pairing(6);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Graph g = GenerateSymmetricGraph(6, 7, features, rng);
    int parallel = 0;
    for (const Edge& e : g.edges()) {
      if (IsParallelEdge(pairing, e)) {
        ++parallel;
        EXPECT_EQ(pairing.Mirror(e), e);
      }
    }
    EXPECT_GE(parallel, 1);
  }
}

TEST(SymmetricGraphTest, CrossingFeatureAddsBothOrbitMembers) {
  const EdgeFeature features[] = {EdgeFeature::kCrossing,
                                  EdgeFeature::kRandomNonCrossing};
  const MirrorPairing pairing(6);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Graph g = GenerateSymmetricGraph(6, 6, features, rng);
    int crossing = 0;
    for (const Edge& e : g.edges()) {
      if (IsCrossingEdge(pairing, e)) {
        ++crossing;
        EXPECT_TRUE(g.HasEdge(pairing.Mirror(e).u, pairing.Mirror(e).v));
      }
    }
    EXPECT_GE(crossing, 2);
  }
}

TEST(SymmetricGraphTest, NonCrossingOnFourVerticesIsInfeasible) {
  // Exhaustive: no mirror-closed, connected, non-crossing edge set on four
  // vertices has four edges.
  bool exists = false;
  for (const auto& s : AllMirrorClosedEdgeSets(4)) {
    bool all_non_crossing = true;
    for (const auto& [u, v] : s) {
      all_non_crossing = all_non_crossing && BfIsNonCrossingEdge(4, u, v);
    }
    exists = exists || (all_non_crossing && s.size() == 4 && BfConnected(4, s));
  }
  ASSERT_FALSE(exists);

  const EdgeFeature features[] = {EdgeFeature::kRandomNonCrossing};
  Rng rng(1);
  EXPECT_EQ(CodeOf([&] { GenerateSymmetricGraph(4, 4, features, rng); }),
            ErrorCode::kGenerationInfeasible);
}

// Against exhaustive enumeration: the generator succeeds exactly when some
// admissible edge set exists. Edges are drawn from a feature domain together
// with their mirror, so each orbit needs one member in the domain.
TEST(SymmetricGraphTest, FeasibilityMatchesEnumeration) {
  using F = EdgeFeature;
  const std::vector<std::vector<F>> presets = {
      {F::kRandomAny},
      {F::kRandomNonCrossing},
      {F::kParallel},
      {F::kCrossing},
      {F::kParallel, F::kRandomNonCrossing},
      {F::kCrossing, F::kRandomNonCrossing},
      {F::kParallel, F::kCrossing},
      {F::kParallel, F::kCrossing, F::kRandomNonCrossing},
  };
  for (int n = 4; n <= 7; ++n) {
    const auto sets = AllMirrorClosedEdgeSets(n);
    const MirrorPairing pairing(n);
    for (int m = n; m <= n * 6 / 5; ++m) {
      for (const auto& preset : presets) {
        auto allowed = [&](int u, int v) {
          const Edge e = MakeEdge(u, v);
          for (F f : preset) {
            if (f == F::kRandomAny) return true;
            if (f == F::kRandomNonCrossing && BfIsNonCrossingEdge(n, u, v)) {
              return true;
            }
            if (f == F::kParallel && IsParallelEdge(pairing, e)) return true;
            if (f == F::kCrossing && IsCrossingEdge(pairing, e)) return true;
          }
          return false;
        };
        bool feasible = false;
        for (const auto& s : sets) {
          if (static_cast<int>(s.size()) != m || !BfConnected(n, s)) continue;
          bool ok = true;
          bool has_parallel = false, has_crossing = false;
          for (const auto& [u, v] : s) {
            const Edge mirrored = pairing.Mirror(MakeEdge(u, v));
            ok = ok && (allowed(u, v) || allowed(mirrored.u, mirrored.v));
            has_parallel |= IsParallelEdge(pairing, MakeEdge(u, v));
            has_crossing |= IsCrossingEdge(pairing, MakeEdge(u, v));
          }
          for (F f : preset) {
            if (f == F::kParallel) ok = ok && has_parallel;
            if (f == F::kCrossing) ok = ok && has_crossing;
          }
          if (ok) {
            feasible = true;
            break;
          }
        }
        Rng rng(static_cast<std::uint64_t>(n * 1000 + m));
        if (feasible) {
          const Graph g = GenerateSymmetricGraph(n, m, preset, rng);
          EXPECT_EQ(g.num_edges(), m);
          EXPECT_TRUE(g.IsConnected());
          EXPECT_TRUE(IsMirrorClosed(g));
          for (const Edge& e : g.edges()) {
            const Edge mirrored = pairing.Mirror(e);
            EXPECT_TRUE(allowed(e.u, e.v) || allowed(mirrored.u, mirrored.v));
          }
        } else {
          EXPECT_EQ(CodeOf([&] { GenerateSymmetricGraph(n, m, preset, rng); }),
                    ErrorCode::kGenerationInfeasible)
              << "n=" << n << " m=" << m;
        }
      }
    }
  }
}

TEST(SymmetricGraphTest, PostconditionsAcrossSizes) {
  const EdgeFeature features[] = {EdgeFeature::kRandomAny};
  for (int n = 4; n <= 20; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const int m = n + static_cast<int>(seed % (n * 6 / 5 - n + 1));
      const Graph g = GenerateSymmetricGraph(n, m, features, rng);
      EXPECT_EQ(g.num_vertices(), n);
      EXPECT_EQ(g.num_edges(), m);
      EXPECT_TRUE(g.IsConnected());
      EXPECT_TRUE(IsMirrorClosed(g));
    }
  }
}

TEST(SymmetricGraphTest, InvalidArguments) {
  const EdgeFeature any[] = {EdgeFeature::kRandomAny};
  Rng rng(0);
  EXPECT_EQ(CodeOf([&] { GenerateSymmetricGraph(3, 3, any, rng); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { GenerateSymmetricGraph(10, 13, any, rng); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { GenerateSymmetricGraph(10, 9, any, rng); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { GenerateSymmetricGraph(10, 10, {}, rng); }),
            ErrorCode::kInvalidArgument);
}

TEST(SymmetricGraphTest, SameSeedSameGraph) {
  const EdgeFeature features[] = {EdgeFeature::kParallel, EdgeFeature::kCrossing,
                                  EdgeFeature::kRandomNonCrossing};
  Rng a(99), b(99);
  EXPECT_EQ(GenerateSymmetricGraph(16, 19, features, a),
            GenerateSymmetricGraph(16, 19, features, b));
}

TEST(ComponentGraphTest, Examples) {
  Rng rng(5);
  const Graph single = GenerateComponentGraph(2, 1, rng);
  EXPECT_EQ(single.num_edges(), 1);
  EXPECT_TRUE(single.HasEdge(0, 1));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng r(seed);
    const Graph tree = GenerateComponentGraph(5, 4, r);
    EXPECT_EQ(tree.num_edges(), 4);
    EXPECT_TRUE(tree.IsConnected());
  }
  EXPECT_EQ(CodeOf([&] { GenerateComponentGraph(3, 1, rng); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { GenerateComponentGraph(4, 7, rng); }),
            ErrorCode::kInvalidArgument);
}

TEST(ComponentGraphTest, DenseAndSparseSizes) {
  for (int c = 2; c <= 10; ++c) {
    for (int m = c - 1; m <= c * (c - 1) / 2; ++m) {
      Rng rng(static_cast<std::uint64_t>(c * 100 + m));
      const Graph g = GenerateComponentGraph(c, m, rng);
      EXPECT_EQ(g.num_edges(), m);
      EXPECT_TRUE(g.IsConnected());
    }
  }
}

TEST(ConnectComponentsTest, ParallelOnlyJoinsCopies) {
  Rng rng(3);
  const Graph half = GenerateComponentGraph(5, 4, rng);
  const Graph g = ConnectComponents(DuplicateComponent(half), 2,
                                    ConnectMode::kParallelOnly, rng);
  EXPECT_EQ(g.num_edges(), 2 * 4 + 2);
  int cross = 0;
  for (const Edge& e : g.edges()) {
    if (e.u < 5 && e.v >= 5) {
      EXPECT_EQ(e.v, e.u + 5);
      ++cross;
    }
  }
  EXPECT_EQ(cross, 2);
  EXPECT_TRUE(IsMirrorClosed(g));
  EXPECT_TRUE(g.IsConnected());
}

TEST(ConnectComponentsTest, MixedWithOneEdgeFallsBackToParallel) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Graph half = GenerateComponentGraph(3, 2, rng);
    const Graph g = ConnectComponents(DuplicateComponent(half), 1,
                                      ConnectMode::kMixed, rng);
    EXPECT_EQ(g.num_edges(), 5);
    const MirrorPairing pairing(6);
    for (const Edge& e : g.edges()) {
      if (e.u < 3 && e.v >= 3) EXPECT_TRUE(IsParallelEdge(pairing, e));
    }
    EXPECT_TRUE(IsMirrorClosed(g));
  }
}

TEST(ConnectComponentsTest, MixedKeepsExactCount) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Graph half = GenerateComponentGraph(6, 6, rng);
    const int k = 1 + static_cast<int>(seed % 4);
    const Graph g = ConnectComponents(DuplicateComponent(half), k,
                                      ConnectMode::kMixed, rng);
    EXPECT_EQ(g.num_edges(), 12 + k);
    EXPECT_TRUE(IsMirrorClosed(g));
  }
}

TEST(ConnectComponentsTest, CountBounds) {
  Rng rng(0);
  const Graph doubled = DuplicateComponent(GenerateComponentGraph(5, 4, rng));
  EXPECT_EQ(CodeOf([&] {
              ConnectComponents(doubled, 0, ConnectMode::kParallelOnly, rng);
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] {
              ConnectComponents(doubled, 4, ConnectMode::kParallelOnly, rng);
            }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace symgraph
