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

#include "symgraph/layout.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "symgraph/error.h"
#include "symgraph/oracle.h"

namespace symgraph {

namespace {

constexpr double kPi = std::numbers::pi;

struct ClassEntry {
  LayoutClass value;
  std::string_view name;
};

constexpr ClassEntry kClassNames[] = {
    {LayoutClass::kSmallSym, "SmallSym"},
    {LayoutClass::kSmallNonSym, "SmallNonSym"},
    {LayoutClass::kReflectionalLarge, "ReflectionalLarge"},
    {LayoutClass::kNonSymLarge, "NonSymLarge"},
    {LayoutClass::kHorizontalLarge, "HorizontalLarge"},
    {LayoutClass::kVerticalLarge, "VerticalLarge"},
    {LayoutClass::kRotationalLarge, "RotationalLarge"},
    {LayoutClass::kTranslationalLarge, "TranslationalLarge"},
};

bool FarFromAll(Point p, std::span<const Point> others, double min_distance) {
  return std::all_of(others.begin(), others.end(), [&](const Point& q) {
    return Distance(p, q) >= min_distance;
  });
}

[[noreturn]] void ThrowRetryExhausted(const std::string& what) {
  throw Error(ErrorCode::kGenerationRetryExhausted, what);
}

void CheckPositions(const Layout& layout) {
  if (static_cast<int>(layout.positions.size()) != layout.num_vertices()) {
    ThrowInvalidArgument("position count does not match vertex count");
  }
}

bool FailsMirrorOracle(const Layout& layout) {
  const double diagonal = BoundsOf(layout.positions).diagonal();
  return !ExactMirrorOracle(layout, kNonSymToleranceFraction * diagonal);
}

}  // namespace

std::string_view LayoutClassName(LayoutClass c) {
  for (const auto& entry : kClassNames) {
    if (entry.value == c) return entry.name;
  }
  return "Unknown";
}

std::optional<LayoutClass> ParseLayoutClass(std::string_view name) {
  for (const auto& entry : kClassNames) {
    if (entry.name == name) return entry.value;
  }
  return std::nullopt;
}

bool IsSymmetricClass(LayoutClass c) {
  return c != LayoutClass::kSmallNonSym && c != LayoutClass::kNonSymLarge;
}

double MinSeparation(std::span<const Point> points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, Distance(points[i], points[j]));
    }
  }
  return best;
}

std::vector<Point> SampleHalfPositions(int count, Rng& rng) {
  std::vector<Point> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    int attempt = 0;
    for (; attempt < kMaxRetries; ++attempt) {
      const Point p{UniformReal(rng, kAxisGap, 1.0),
                    UniformReal(rng, -1.0, 1.0)};
      if (FarFromAll(p, out, kMinSeparation)) {
        out.push_back(p);
        break;
      }
    }
    if (attempt == kMaxRetries) ThrowRetryExhausted("cannot place half vertex");
  }
  return out;
}

Layout LayoutReflectionalMirror(const Graph& graph, Rng& rng,
                                LayoutClass label) {
  const int n = graph.num_vertices();
  if (n < 2) ThrowInvalidArgument("layout needs n >= 2");
  if (!IsMirrorClosed(graph)) ThrowInvalidArgument("graph is not mirror-closed");
  const MirrorPairing pairing(n);
  const int h = pairing.half();
  const auto left = SampleHalfPositions(h, rng);

  Layout layout{graph, std::vector<Point>(n), label, 0.0, 0};
  for (int i = 0; i < h; ++i) {
    layout.positions[i] = left[i];
    layout.positions[i + h] = {-left[i].x, left[i].y};
  }
  if (pairing.has_fixed_vertex()) {
    layout.positions[n - 1] = {0.0, UniformReal(rng, -1.0, 1.0)};
  }
  return layout;
}

Layout LayoutParallelLines(const Graph& half, int connect_count, Rng& rng,
                           LayoutClass label) {
  if (half.num_vertices() < 2 || !half.IsConnected()) {
    ThrowInvalidArgument("half component must be connected with >= 2 vertices");
  }
  const int c = half.num_vertices();
  Graph full = ConnectComponents(DuplicateComponent(half), connect_count,
                                 ConnectMode::kParallelOnly, rng);
  const auto left = SampleHalfPositions(c, rng);
  Layout layout{std::move(full), std::vector<Point>(2 * c), label, 0.0, 0};
  for (int i = 0; i < c; ++i) {
    layout.positions[i] = left[i];
    layout.positions[i + c] = {-left[i].x, left[i].y};
  }
  return layout;
}

Layout RotateLayout(const Layout& layout, double angle_deg) {
  CheckPositions(layout);
  Layout out = layout;
  double total = std::fmod(layout.rotation_deg + angle_deg, 360.0);
  if (total < 0) total += 360.0;
  out.rotation_deg = total;
  if (angle_deg == 0.0 || layout.positions.empty()) return out;
  const Point center = Centroid(layout.positions);
  const double angle = DegToRad(angle_deg);
  for (Point& p : out.positions) p = RotateAbout(p, center, angle);
  return out;
}

Layout NormalizeLayout(const Layout& layout) {
  CheckPositions(layout);
  const BoundingBox box = BoundsOf(layout.positions);
  const double half_extent = std::max(box.width(), box.height()) / 2.0;
  if (!(half_extent > 0.0)) ThrowInvalidArgument("degenerate layout extent");
  const Point center = box.center();
  Layout out = layout;
  for (Point& p : out.positions) p = (p - center) * (1.0 / half_extent);
  return out;
}

Layout LayoutTranslational(const Graph& half, int connect_count,
                           std::optional<double> delta, Rng& rng) {
  if (half.num_vertices() < 2 || !half.IsConnected()) {
    ThrowInvalidArgument("half component must be connected with >= 2 vertices");
  }
  const int c = half.num_vertices();
  const auto left = SampleHalfPositions(c, rng);
  const double width = BoundsOf(left).width();
  const double shift = delta.value_or(width + kTranslationMargin);
  if (!(shift > width)) {
    ThrowInvalidArgument("shift " + std::to_string(shift) +
                         " overlaps component of width " +
                         std::to_string(width));
  }
  Graph full = ConnectComponents(DuplicateComponent(half), connect_count,
                                 ConnectMode::kParallelOnly, rng);
  Layout layout{std::move(full), std::vector<Point>(2 * c),
                LayoutClass::kTranslationalLarge, 0.0, 0};
  for (int i = 0; i < c; ++i) {
    layout.positions[i] = left[i];
    layout.positions[i + c] = {left[i].x - shift, left[i].y};
  }
  return layout;
}

RotationalLayout LayoutRotational(const Graph& component, int axes, Rng& rng) {
  if (axes < 4 || axes > 10) {
    ThrowInvalidArgument("rotational axes " + std::to_string(axes) +
                         " outside [4, 10]");
  }
  const int c = component.num_vertices();
  if (c < 2 || !component.IsConnected()) {
    ThrowInvalidArgument("component must be connected with >= 2 vertices");
  }
  const double wedge = 2.0 * kPi / axes;
  const Point origin{0.0, 0.0};

  // All rotated copies of the vertices placed so far.
  std::vector<Point> placed_copies;
  std::vector<Point> base;
  for (int i = 0; i < c; ++i) {
    int attempt = 0;
    for (; attempt < kMaxRetries; ++attempt) {
      const double r = UniformReal(rng, kWedgeInnerRadius, kWedgeOuterRadius);
      const double phi = UniformReal(rng, 0.0, wedge);
      const Point p{r * std::cos(phi), r * std::sin(phi)};
      bool ok = true;
      for (int j = 0; j < axes && ok; ++j) {
        ok = FarFromAll(RotateAbout(p, origin, j * wedge), placed_copies,
                        kMinSeparation);
      }
      if (!ok) continue;
      base.push_back(p);
      for (int j = 0; j < axes; ++j) {
        placed_copies.push_back(RotateAbout(p, origin, j * wedge));
      }
      break;
    }
    if (attempt == kMaxRetries) {
      ThrowRetryExhausted("component does not fit its rotational wedge");
    }
  }

  Graph graph(axes * c);
  std::vector<Point> positions(axes * c);
  for (int j = 0; j < axes; ++j) {
    for (int i = 0; i < c; ++i) {
      positions[j * c + i] = j == 0 ? base[i] : RotateAbout(base[i], origin,
                                                            j * wedge);
    }
    for (const Edge& e : component.edges()) {
      graph.AddEdge(j * c + e.u, j * c + e.v);
    }
  }
  const int a = UniformInt(rng, 0, c - 1);
  int b = UniformInt(rng, 0, c - 2);
  if (b >= a) ++b;
  for (int j = 0; j < axes; ++j) {
    const int next = (j + 1) % axes;
    graph.AddEdge(j * c + a, next * c + a);
    graph.AddEdge(j * c + b, next * c + b);
  }
  return {Layout{std::move(graph), std::move(positions),
                 LayoutClass::kRotationalLarge, 0.0, 0},
          a, b};
}

Layout LayoutNonSymRandom(const Graph& graph, Rng& rng, LayoutClass label) {
  const int n = graph.num_vertices();
  if (n < 2) ThrowInvalidArgument("layout needs n >= 2");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Layout layout{graph, {}, label, 0.0, 0};
    bool placed = true;
    for (int i = 0; i < n && placed; ++i) {
      placed = false;
      for (int t = 0; t < kMaxRetries; ++t) {
        const Point p{UniformReal(rng, -1.0, 1.0), UniformReal(rng, -1.0, 1.0)};
        if (FarFromAll(p, layout.positions, kMinSeparation)) {
          layout.positions.push_back(p);
          placed = true;
          break;
        }
      }
    }
    if (placed && FailsMirrorOracle(layout)) return layout;
  }
  ThrowRetryExhausted("random layout keeps passing the mirror oracle");
}

Layout LayoutNonSymFeature(const Layout& layout, DecoyFeature feature,
                           Rng& rng, LayoutClass label) {
  CheckPositions(layout);
  const int n = layout.num_vertices();
  if (n < 2) ThrowInvalidArgument("layout needs n >= 2");
  const MirrorPairing pairing(n);
  std::vector<bool> pinned(n, false);
  int feature_edges = 0;
  for (const Edge& e : layout.graph.edges()) {
    const bool is_feature = feature == DecoyFeature::kParallelLines
                                ? IsParallelEdge(pairing, e)
                                : IsCrossingEdge(pairing, e);
    if (!is_feature) continue;
    ++feature_edges;
    pinned[e.u] = pinned[e.v] = true;
  }
  if (feature_edges == 0) {
    ThrowInvalidArgument("layout does not exhibit the requested feature");
  }
  std::vector<int> free_vertices;
  for (int i = 0; i < n; ++i) {
    if (!pinned[i]) free_vertices.push_back(i);
  }
  if (free_vertices.empty()) {
    ThrowRetryExhausted("every vertex is incident to a feature edge");
  }

  const BoundingBox box = BoundsOf(layout.positions);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Layout out = layout;
    out.label = label;
    std::vector<Point> kept;
    for (int i = 0; i < n; ++i) {
      if (pinned[i]) kept.push_back(layout.positions[i]);
    }
    bool placed = true;
    for (int v : free_vertices) {
      placed = false;
      for (int t = 0; t < kMaxRetries; ++t) {
        const Point p{UniformReal(rng, box.min.x, box.max.x),
                      UniformReal(rng, box.min.y, box.max.y)};
        if (FarFromAll(p, kept, kMinSeparation)) {
          out.positions[v] = p;
          kept.push_back(p);
          placed = true;
          break;
        }
      }
      if (!placed) break;
    }
    if (placed && FailsMirrorOracle(out)) return out;
  }
  ThrowRetryExhausted("feature decoy keeps passing the mirror oracle");
}

Layout PerturbVertices(const Layout& layout, int count, double min_fraction,
                       double max_fraction, Rng& rng) {
  CheckPositions(layout);
  const int n = layout.num_vertices();
  if (count < 0 || count > n) ThrowInvalidArgument("bad perturbation count");
  if (min_fraction < 0 || max_fraction < min_fraction) {
    ThrowInvalidArgument("bad perturbation band");
  }
  const double diagonal = BoundsOf(layout.positions).diagonal();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Layout out = layout;
  for (int k = 0; k < count; ++k) {
    const double length =
        diagonal * (min_fraction == max_fraction
                        ? min_fraction
                        : UniformReal(rng, min_fraction, max_fraction));
    const double angle = UniformReal(rng, 0.0, 2.0 * kPi);
    Point& p = out.positions[order[k]];
    p = p + Point{length * std::cos(angle), length * std::sin(angle)};
  }
  return out;
}

Layout LayoutNonSymPerturb(const Layout& layout, Rng& rng, LayoutClass label) {
  CheckPositions(layout);
  const int n = layout.num_vertices();
  if (n < 2) ThrowInvalidArgument("layout needs n >= 2");
  const int count = (n + 4) / 5;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Layout out = PerturbVertices(layout, count, kPerturbMinFraction,
                                 kPerturbMaxFraction, rng);
    out.label = label;
    if (MinSeparation(out.positions) < kMinSeparation) continue;
    if (FailsMirrorOracle(out)) return out;
  }
  ThrowRetryExhausted("perturbed layout keeps passing the mirror oracle");
}

}  // namespace symgraph
