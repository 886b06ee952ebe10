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

// Coordinate assignment for the symmetric and non-symmetric layout classes.
//
// Constructions work in an abstract unit space. Half components are placed
// with x in (0.05, 1] and y in [-1, 1]; their copies are mirrored, translated
// or rotated exactly, so every symmetric construction passes the matching
// exact oracle at 1e-9 before any rotation is applied.

#ifndef SYMGRAPH_LAYOUT_H_
#define SYMGRAPH_LAYOUT_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symgraph/geometry.h"
#include "symgraph/graph.h"
#include "symgraph/random.h"

namespace symgraph {

enum class LayoutClass {
  kSmallSym,
  kSmallNonSym,
  kReflectionalLarge,
  kNonSymLarge,
  kHorizontalLarge,
  kVerticalLarge,
  kRotationalLarge,
  kTranslationalLarge,
};

inline constexpr LayoutClass kAllLayoutClasses[] = {
    LayoutClass::kSmallSym,          LayoutClass::kSmallNonSym,
    LayoutClass::kReflectionalLarge, LayoutClass::kNonSymLarge,
    LayoutClass::kHorizontalLarge,   LayoutClass::kVerticalLarge,
    LayoutClass::kRotationalLarge,   LayoutClass::kTranslationalLarge,
};

std::string_view LayoutClassName(LayoutClass c);
std::optional<LayoutClass> ParseLayoutClass(std::string_view name);
bool IsSymmetricClass(LayoutClass c);

struct Layout {
  Graph graph;
  std::vector<Point> positions;
  LayoutClass label = LayoutClass::kSmallSym;
  double rotation_deg = 0.0;
  std::uint64_t seed = 0;

  int num_vertices() const { return graph.num_vertices(); }
};

// Layout-space constants.
inline constexpr double kAxisGap = 0.05;
inline constexpr double kMinSeparation = 0.04;
inline constexpr double kTranslationMargin = 0.1;
inline constexpr double kWedgeInnerRadius = 0.3;
inline constexpr double kWedgeOuterRadius = 1.0;
inline constexpr double kPerturbMinFraction = 0.05;
inline constexpr double kPerturbMaxFraction = 0.15;
// Non-symmetric outputs must fail the mirror oracle at this fraction of the
// bounding-box diagonal.
inline constexpr double kNonSymToleranceFraction = 0.02;

// Positions for a half component: x in (kAxisGap, 1], y in [-1, 1], pairwise
// at least kMinSeparation apart.
std::vector<Point> SampleHalfPositions(int count, Rng& rng);

// Vertex i < floor(n/2) gets (x, y) with x > 0, vertex i + floor(n/2) gets
// (-x, y); for odd n vertex n-1 sits on the y-axis.
Layout LayoutReflectionalMirror(const Graph& graph, Rng& rng,
                                LayoutClass label = LayoutClass::kSmallSym);

// Two mirrored copies of `half` joined by `connect_count` horizontal edges
// between corresponding vertices.
Layout LayoutParallelLines(const Graph& half, int connect_count, Rng& rng,
                           LayoutClass label = LayoutClass::kVerticalLarge);

// Rotates every position about the centroid; rotation_deg accumulates
// modulo 360.
Layout RotateLayout(const Layout& layout, double angle_deg);

// Translates the bounding-box center to the origin and scales uniformly so
// the larger half-extent is 1.
Layout NormalizeLayout(const Layout& layout);

// A copy of `half` shifted by (-delta, 0) and joined to it by
// `connect_count` edges between corresponding vertices. Without `delta`, the
// shift is the half's bounding-box width plus kTranslationMargin.
Layout LayoutTranslational(const Graph& half, int connect_count,
                           std::optional<double> delta, Rng& rng);

struct RotationalLayout {
  Layout layout;
  int connect_a = 0;  // component vertices joined between consecutive copies
  int connect_b = 0;
};

// `axes` copies of `component` rotated by 2*pi/axes about the origin; copy j
// holds vertices [j*c, (j+1)*c). Two component vertices link every pair of
// consecutive copies.
RotationalLayout LayoutRotational(const Graph& component, int axes, Rng& rng);

// Same graph, i.i.d. uniform positions in [-1, 1]^2, resampled until the
// mirror oracle fails.
Layout LayoutNonSymRandom(const Graph& graph, Rng& rng,
                          LayoutClass label = LayoutClass::kSmallNonSym);

enum class DecoyFeature { kParallelLines, kCrossings };

// Keeps the vertices incident to the feature edges in place and moves all the
// others to fresh random positions inside the layout's bounding box.
Layout LayoutNonSymFeature(const Layout& layout, DecoyFeature feature,
                           Rng& rng,
                           LayoutClass label = LayoutClass::kSmallNonSym);

// Moves ceil(n/5) vertices by a random vector whose length is in
// [kPerturbMinFraction, kPerturbMaxFraction] of the bounding-box diagonal.
Layout LayoutNonSymPerturb(const Layout& layout, Rng& rng,
                           LayoutClass label = LayoutClass::kNonSymLarge);

// Moves `count` distinct random vertices by vectors of length in
// [min_fraction, max_fraction] * bounding-box diagonal. No oracle check.
Layout PerturbVertices(const Layout& layout, int count, double min_fraction,
                       double max_fraction, Rng& rng);

// Smallest pairwise vertex distance (infinity for fewer than two vertices).
double MinSeparation(std::span<const Point> points);

}  // namespace symgraph

#endif  // SYMGRAPH_LAYOUT_H_
