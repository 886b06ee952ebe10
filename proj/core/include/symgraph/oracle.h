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

// Exact-symmetry oracles: a layout passes when an isometry maps the vertex
// positions onto themselves (within an absolute tolerance) through a
// permutation that is also a graph automorphism. They are the ground truth
// for the generators and for dataset verification.

#ifndef SYMGRAPH_ORACLE_H_
#define SYMGRAPH_ORACLE_H_

#include <optional>
#include <vector>

#include "symgraph/geometry.h"
#include "symgraph/layout.h"

namespace symgraph {

struct MirrorMatch {
  Axis axis;
  std::vector<int> permutation;
};

// Searches every perpendicular bisector and every line through a vertex pair.
// With `theta`, only axes within `theta_tolerance` radians of that direction
// are considered.
std::optional<MirrorMatch> ExactMirrorOracle(
    const Layout& layout, double tolerance,
    std::optional<double> theta = std::nullopt,
    double theta_tolerance = 1e-3);

struct RotationMatch {
  int order = 0;  // rotation by 2*pi/order about `center`
  Point center;
  std::vector<int> permutation;
};

// Checks rotation by 2*pi/order about the centroid.
std::optional<RotationMatch> ExactRotationOracle(const Layout& layout,
                                                 int order, double tolerance);
// Largest order in [2, n] that passes.
std::optional<RotationMatch> FindRotationOrder(const Layout& layout,
                                               double tolerance);

struct TranslationMatch {
  Point shift;
  std::vector<int> source;  // vertices whose shifted copies are `target`
  std::vector<int> target;
};

// Passes when the vertices split into two halves A and B with
// p(phi(a)) = p(a) + shift for a bijection phi: A -> B that preserves the
// edges inside the halves.
std::optional<TranslationMatch> ExactTranslationOracle(const Layout& layout,
                                                       double tolerance);

// Matches every position to a distinct position of `targets` within
// `tolerance` so that the induced vertex map preserves `graph`'s edges.
// Backtracks over all in-tolerance candidates.
std::optional<std::vector<int>> MatchAutomorphism(
    const Graph& graph, std::span<const Point> mapped,
    std::span<const Point> targets, double tolerance);

}  // namespace symgraph

#endif  // SYMGRAPH_ORACLE_H_
