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

// Reflectional symmetry scores for layouts, in [0, 1].
//
// Both scores measure distances relative to the layout diameter (largest
// pairwise vertex distance), so they are invariant under rotation, uniform
// scaling and translation.
//
// Purchase-style: for every candidate axis (perpendicular bisector of, or
// line through, a vertex pair) each vertex is matched to the nearest vertex
// within tolerance of its reflection, and an edge counts as matched when its
// matched endpoints form an edge. The score is the best matched fraction over
// axes with at least min(2, m) matched edges.
//
// Klapaukh-style: edges vote for reflection axes. Each edge votes for its own
// perpendicular bisector; each pair of edges of similar length whose
// midpoints are exchanged by an axis with matching reflected direction votes
// for that axis. Votes are counted in a sliding (theta, rho) bin of
// 5 deg x 0.05 diameter centered on each vote, with rho measured from the
// vertex centroid, and the score is min(1, 2 * best_bin / m).

#ifndef SYMGRAPH_METRICS_H_
#define SYMGRAPH_METRICS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "symgraph/geometry.h"
#include "symgraph/layout.h"

namespace symgraph {

struct SymmetryScore {
  double value = 0.0;
  std::optional<Axis> best_axis;  // present iff support > 0
  int support = 0;
};

// Perpendicular bisectors and lines through every vertex pair, in pair
// order, without deduplication.
std::vector<Axis> RawCandidateAxes(std::span<const Point> positions);

// RawCandidateAxes clustered greedily: an axis joins the first earlier
// representative within `angle_tol_deg` and `distance_fraction` * diameter
// (rho compared about the centroid).
std::vector<Axis> CandidateAxes(const Layout& layout,
                                double angle_tol_deg = 2.0,
                                double distance_fraction = 0.02);

// Vertex map induced by `axis`: nearest vertex within `tolerance` of each
// reflected position (smallest index on ties), or -1.
std::vector<int> MatchReflectedVertices(std::span<const Point> positions,
                                        const Axis& axis, double tolerance);

// Number of edges whose matched endpoints form an edge.
int CountMatchedEdges(const Graph& graph, std::span<const int> vertex_map);

inline constexpr double kPurchaseTolerance = 0.04;

SymmetryScore PurchaseStyleScore(const Layout& layout,
                                 double tolerance = kPurchaseTolerance);

struct KlapaukhOptions {
  double angle_tolerance_deg = 5.0;
  double length_tolerance = 0.10;
  double bin_angle_deg = 5.0;
  double bin_rho_fraction = 0.05;
};

struct AxisVote {
  Axis axis;
  int first_edge = 0;   // index into the sorted edge list
  int second_edge = 0;  // equal to first_edge for self votes
};

std::vector<AxisVote> KlapaukhVotes(const Layout& layout,
                                    const KlapaukhOptions& options = {});

SymmetryScore KlapaukhStyleScore(const Layout& layout,
                                 const KlapaukhOptions& options = {});

enum class Verdict { kSymmetric, kNonSymmetric };

inline constexpr double kDefaultThreshold = 0.5;

Verdict ClassifyByScore(const SymmetryScore& score,
                        double threshold = kDefaultThreshold);

std::string_view VerdictName(Verdict verdict);

enum class MetricKind { kPurchase, kKlapaukh };

std::string_view MetricName(MetricKind metric);
std::optional<MetricKind> ParseMetric(std::string_view name);
SymmetryScore ScoreLayout(const Layout& layout, MetricKind metric);

}  // namespace symgraph

#endif  // SYMGRAPH_METRICS_H_
