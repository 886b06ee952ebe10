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

#include "symgraph/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "symgraph/error.h"

namespace symgraph {

namespace {

constexpr double kPi = std::numbers::pi;

double CheckedDiameter(const Layout& layout) {
  if (static_cast<int>(layout.positions.size()) != layout.num_vertices()) {
    ThrowInvalidArgument("position count does not match vertex count");
  }
  if (layout.num_vertices() < 2) ThrowInvalidArgument("score needs n >= 2");
  if (layout.graph.num_edges() < 1) ThrowInvalidArgument("score needs m >= 1");
  const double diameter = Diameter(layout.positions);
  if (!(diameter > 0.0)) ThrowInvalidArgument("degenerate layout");
  return diameter;
}

// Signed offset of the axis from `center` along its normal.
double RhoAbout(const Axis& axis, Point center) {
  return axis.rho - Dot(axis.Normal(), center);
}

// Same line up to the given half-widths, treating theta near 0 and near pi
// as neighbors (with the offset sign flipped).
bool WithinWindow(const Axis& a, double rho_a, const Axis& b, double rho_b,
                  double half_angle, double half_rho) {
  const double d = std::abs(a.theta - b.theta);
  if (d <= kPi / 2) {
    return d <= half_angle && std::abs(rho_a - rho_b) <= half_rho;
  }
  return kPi - d <= half_angle && std::abs(rho_a + rho_b) <= half_rho;
}

// Smaller theta first, then smaller |rho|.
bool PreferAxis(const Axis& a, const Axis& b) {
  if (a.theta != b.theta) return a.theta < b.theta;
  return std::abs(a.rho) < std::abs(b.rho);
}

}  // namespace

std::vector<Axis> RawCandidateAxes(std::span<const Point> positions) {
  std::vector<Axis> axes;
  const std::size_t n = positions.size();
  axes.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (auto a = PerpendicularBisector(positions[i], positions[j])) {
        axes.push_back(*a);
      }
      if (auto a = LineThroughPoints(positions[i], positions[j])) {
        axes.push_back(*a);
      }
    }
  }
  return axes;
}

std::vector<Axis> CandidateAxes(const Layout& layout, double angle_tol_deg,
                                double distance_fraction) {
  if (layout.positions.size() < 2) ThrowInvalidArgument("need n >= 2");
  const Point center = Centroid(layout.positions);
  const double half_rho = distance_fraction * Diameter(layout.positions);
  const double half_angle = DegToRad(angle_tol_deg);
  std::vector<Axis> reps;
  std::vector<double> rep_rho;
  for (const Axis& axis : RawCandidateAxes(layout.positions)) {
    const double rho = RhoAbout(axis, center);
    bool merged = false;
    for (std::size_t r = 0; r < reps.size() && !merged; ++r) {
      merged = WithinWindow(reps[r], rep_rho[r], axis, rho, half_angle,
                            half_rho);
    }
    if (!merged) {
      reps.push_back(axis);
      rep_rho.push_back(rho);
    }
  }
  return reps;
}

std::vector<int> MatchReflectedVertices(std::span<const Point> positions,
                                        const Axis& axis, double tolerance) {
  const int n = static_cast<int>(positions.size());
  std::vector<int> map(n, -1);
  for (int i = 0; i < n; ++i) {
    const Point r = Reflect(positions[i], axis);
    double best = tolerance;
    for (int j = 0; j < n; ++j) {
      const double d = Distance(r, positions[j]);
      if (d < best || (d == best && map[i] < 0)) {
        best = d;
        map[i] = j;
      }
    }
  }
  return map;
}

int CountMatchedEdges(const Graph& graph, std::span<const int> vertex_map) {
  int matched = 0;
  for (const Edge& e : graph.edges()) {
    const int a = vertex_map[e.u];
    const int b = vertex_map[e.v];
    if (a >= 0 && b >= 0 && graph.HasEdge(a, b)) ++matched;
  }
  return matched;
}

SymmetryScore PurchaseStyleScore(const Layout& layout, double tolerance) {
  const double diameter = CheckedDiameter(layout);
  const int m = layout.graph.num_edges();
  const int min_support = std::min(2, m);
  const double abs_tol = tolerance * diameter;

  SymmetryScore best;
  for (const Axis& axis : RawCandidateAxes(layout.positions)) {
    const auto map = MatchReflectedVertices(layout.positions, axis, abs_tol);
    const int matched = CountMatchedEdges(layout.graph, map);
    if (matched < min_support) continue;
    if (matched > best.support ||
        (matched == best.support && PreferAxis(axis, *best.best_axis))) {
      best.support = matched;
      best.best_axis = axis;
    }
  }
  best.value = static_cast<double>(best.support) / m;
  return best;
}

std::vector<AxisVote> KlapaukhVotes(const Layout& layout,
                                    const KlapaukhOptions& options) {
  const double diameter = CheckedDiameter(layout);
  const std::vector<Edge> edges(layout.graph.edges().begin(),
                                layout.graph.edges().end());
  const auto& p = layout.positions;
  const double angle_tol = DegToRad(options.angle_tolerance_deg);
  std::vector<AxisVote> votes;

  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (auto a = PerpendicularBisector(p[edges[i].u], p[edges[i].v])) {
      votes.push_back({*a, i, i});
    }
  }
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const Point a1 = p[edges[i].u];
    const Point b1 = p[edges[i].v];
    const double len1 = Distance(a1, b1);
    for (int j = i + 1; j < static_cast<int>(edges.size()); ++j) {
      const Point a2 = p[edges[j].u];
      const Point b2 = p[edges[j].v];
      const double len2 = Distance(a2, b2);
      if (len1 == 0.0 || len2 == 0.0) continue;
      if (std::abs(len1 - len2) > options.length_tolerance *
                                      std::max(len1, len2)) {
        continue;
      }
      const Point mid1 = (a1 + b1) * 0.5;
      const Point mid2 = (a2 + b2) * 0.5;
      if (Distance(mid1, mid2) <= 1e-12 * diameter) continue;
      const auto axis = PerpendicularBisector(mid1, mid2);
      if (!axis) continue;
      const Point d1 = b1 - a1;
      const Point n = axis->Normal();
      const Point reflected = d1 - n * (2.0 * Dot(n, d1));
      const Point d2 = b2 - a2;
      const double mismatch =
          AxisAngleDistance(std::atan2(reflected.y, reflected.x),
                            std::atan2(d2.y, d2.x));
      if (mismatch <= angle_tol) votes.push_back({*axis, i, j});
    }
  }
  return votes;
}

SymmetryScore KlapaukhStyleScore(const Layout& layout,
                                 const KlapaukhOptions& options) {
  const double diameter = CheckedDiameter(layout);
  const int m = layout.graph.num_edges();
  const auto votes = KlapaukhVotes(layout, options);
  SymmetryScore best;
  if (votes.empty()) return best;

  const Point center = Centroid(layout.positions);
  const double bin_angle = DegToRad(options.bin_angle_deg);
  const double bin_rho = options.bin_rho_fraction * diameter;
  const double half_angle = bin_angle / 2;
  const double half_rho = bin_rho / 2;

  // Grid of full bin size: every vote inside a window centered on a vote lies
  // in the center's cell or a neighbor. Votes near theta = 0 or pi are also
  // entered shifted by -/+ pi with rho negated so the wrap needs no special
  // case.
  struct Entry {
    double theta;
    double rho;
  };
  std::map<std::pair<long, long>, std::vector<Entry>> grid;
  auto cell = [&](double theta, double rho) {
    return std::make_pair(static_cast<long>(std::floor(theta / bin_angle)),
                          static_cast<long>(std::floor(rho / bin_rho)));
  };
  std::vector<double> rho_c(votes.size());
  for (std::size_t i = 0; i < votes.size(); ++i) {
    const Axis& a = votes[i].axis;
    rho_c[i] = RhoAbout(a, center);
    grid[cell(a.theta, rho_c[i])].push_back({a.theta, rho_c[i]});
    if (a.theta > kPi - bin_angle) {
      grid[cell(a.theta - kPi, -rho_c[i])].push_back({a.theta - kPi,
                                                      -rho_c[i]});
    }
    if (a.theta < bin_angle) {
      grid[cell(a.theta + kPi, -rho_c[i])].push_back({a.theta + kPi,
                                                      -rho_c[i]});
    }
  }

  for (std::size_t i = 0; i < votes.size(); ++i) {
    const Axis& a = votes[i].axis;
    const auto [ct, cr] = cell(a.theta, rho_c[i]);
    int count = 0;
    for (long dt = -1; dt <= 1; ++dt) {
      for (long dr = -1; dr <= 1; ++dr) {
        auto it = grid.find({ct + dt, cr + dr});
        if (it == grid.end()) continue;
        for (const Entry& e : it->second) {
          if (std::abs(e.theta - a.theta) <= half_angle &&
              std::abs(e.rho - rho_c[i]) <= half_rho) {
            ++count;
          }
        }
      }
    }
    if (count > best.support ||
        (count == best.support && PreferAxis(a, *best.best_axis))) {
      best.support = count;
      best.best_axis = a;
    }
  }
  best.value = std::min(1.0, 2.0 * best.support / m);
  return best;
}

Verdict ClassifyByScore(const SymmetryScore& score, double threshold) {
  return score.value >= threshold ? Verdict::kSymmetric
                                  : Verdict::kNonSymmetric;
}

std::string_view VerdictName(Verdict verdict) {
  return verdict == Verdict::kSymmetric ? "symmetric" : "non-symmetric";
}

std::string_view MetricName(MetricKind metric) {
  return metric == MetricKind::kPurchase ? "purchase" : "klapaukh";
}

std::optional<MetricKind> ParseMetric(std::string_view name) {
  if (name == "purchase") return MetricKind::kPurchase;
  if (name == "klapaukh") return MetricKind::kKlapaukh;
  return std::nullopt;
}

SymmetryScore ScoreLayout(const Layout& layout, MetricKind metric) {
  return metric == MetricKind::kPurchase ? PurchaseStyleScore(layout)
                                         : KlapaukhStyleScore(layout);
}

}  // namespace symgraph
