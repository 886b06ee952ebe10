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

#include "symgraph/oracle.h"

#include <algorithm>
#include <numbers>
#include <utility>

#include "symgraph/error.h"

namespace symgraph {

namespace {

// Bounds the backtracking search; with the tolerances used here each vertex
// has one or two candidates, so the bound is never approached in practice.
constexpr long kMaxSearchNodes = 1'000'000;

struct Matcher {
  const Graph& graph;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::vector<int>> candidates;
  std::vector<int> assignment;
  std::vector<bool> used;
  long nodes = 0;

  bool Assign(int i) {
    if (i == static_cast<int>(assignment.size())) return true;
    if (++nodes > kMaxSearchNodes) return false;
    for (int target : candidates[i]) {
      if (used[target]) continue;
      bool consistent = true;
      for (int j : adjacency[i]) {
        if (j < i && !graph.HasEdge(target, assignment[j])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      assignment[i] = target;
      used[target] = true;
      if (Assign(i + 1)) return true;
      used[target] = false;
    }
    assignment[i] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> MatchAutomorphism(
    const Graph& graph, std::span<const Point> mapped,
    std::span<const Point> targets, double tolerance) {
  const int n = graph.num_vertices();
  if (static_cast<int>(mapped.size()) != n ||
      static_cast<int>(targets.size()) != n) {
    ThrowInvalidArgument("position count does not match vertex count");
  }
  Matcher matcher{graph, graph.Adjacency(), {}, {}, {}, 0};
  matcher.candidates.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, int>> near;
    for (int j = 0; j < n; ++j) {
      const double d = Distance(mapped[i], targets[j]);
      if (d <= tolerance) near.emplace_back(d, j);
    }
    if (near.empty()) return std::nullopt;
    std::sort(near.begin(), near.end());
    for (const auto& [d, j] : near) matcher.candidates[i].push_back(j);
  }
  matcher.assignment.assign(n, -1);
  matcher.used.assign(n, false);
  if (!matcher.Assign(0)) return std::nullopt;
  return matcher.assignment;
}

std::optional<MirrorMatch> ExactMirrorOracle(const Layout& layout,
                                             double tolerance,
                                             std::optional<double> theta,
                                             double theta_tolerance) {
  const auto& p = layout.positions;
  const int n = static_cast<int>(p.size());
  if (n != layout.num_vertices()) {
    ThrowInvalidArgument("position count does not match vertex count");
  }
  if (n < 2) ThrowInvalidArgument("mirror oracle needs n >= 2");

  std::vector<Point> mapped(n);
  auto try_axis = [&](const std::optional<Axis>& axis)
      -> std::optional<MirrorMatch> {
    if (!axis) return std::nullopt;
    if (theta && AxisAngleDistance(axis->theta, *theta) > theta_tolerance) {
      return std::nullopt;
    }
    for (int i = 0; i < n; ++i) mapped[i] = Reflect(p[i], *axis);
    auto permutation = MatchAutomorphism(layout.graph, mapped, p, tolerance);
    if (!permutation) return std::nullopt;
    return MirrorMatch{*axis, std::move(*permutation)};
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (auto m = try_axis(PerpendicularBisector(p[i], p[j]))) return m;
      if (auto m = try_axis(LineThroughPoints(p[i], p[j]))) return m;
    }
  }
  return std::nullopt;
}

std::optional<RotationMatch> ExactRotationOracle(const Layout& layout,
                                                 int order, double tolerance) {
  if (order < 2) ThrowInvalidArgument("rotation order must be >= 2");
  const auto& p = layout.positions;
  if (p.empty()) return std::nullopt;
  const Point center = Centroid(p);
  const double angle = 2.0 * std::numbers::pi / order;
  std::vector<Point> mapped(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    mapped[i] = RotateAbout(p[i], center, angle);
  }
  auto permutation = MatchAutomorphism(layout.graph, mapped, p, tolerance);
  if (!permutation) return std::nullopt;
  return RotationMatch{order, center, std::move(*permutation)};
}

std::optional<RotationMatch> FindRotationOrder(const Layout& layout,
                                               double tolerance) {
  for (int order = layout.num_vertices(); order >= 2; --order) {
    if (auto match = ExactRotationOracle(layout, order, tolerance)) {
      return match;
    }
  }
  return std::nullopt;
}

std::optional<TranslationMatch> ExactTranslationOracle(const Layout& layout,
                                                       double tolerance) {
  const auto& p = layout.positions;
  const int n = static_cast<int>(p.size());
  if (n < 2 || n % 2 != 0) return std::nullopt;

  auto try_shift = [&](Point shift) -> std::optional<TranslationMatch> {
    if (Norm(shift) <= tolerance) return std::nullopt;
    std::vector<int> image(n, -1);
    std::vector<bool> hit(n, false);
    int domain = 0;
    for (int i = 0; i < n; ++i) {
      const Point q = p[i] + shift;
      int best = -1;
      double best_d = tolerance;
      for (int j = 0; j < n; ++j) {
        const double d = Distance(q, p[j]);
        if (d <= best_d) {
          best = j;
          best_d = d;
        }
      }
      if (best < 0) continue;
      if (hit[best]) return std::nullopt;
      hit[best] = true;
      image[i] = best;
      ++domain;
    }
    if (domain != n / 2) return std::nullopt;
    TranslationMatch match{shift, {}, {}};
    for (int i = 0; i < n; ++i) {
      if (image[i] < 0) continue;
      if (image[image[i]] >= 0) return std::nullopt;  // halves overlap
      match.source.push_back(i);
      match.target.push_back(image[i]);
    }
    for (std::size_t a = 0; a < match.source.size(); ++a) {
      for (std::size_t b = a + 1; b < match.source.size(); ++b) {
        if (layout.graph.HasEdge(match.source[a], match.source[b]) !=
            layout.graph.HasEdge(match.target[a], match.target[b])) {
          return std::nullopt;
        }
      }
    }
    return match;
  };

  for (int j = 1; j < n; ++j) {
    if (auto m = try_shift(p[j] - p[0])) return m;
    if (auto m = try_shift(p[0] - p[j])) return m;
  }
  return std::nullopt;
}

}  // namespace symgraph
