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

// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion
// and exits non-zero if any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brute_force.h"
#include "symgraph/dataset.h"
#include "symgraph/eval.h"
#include "symgraph/metrics.h"
#include "symgraph/raster.h"
#include "symgraph/records.h"
#include "symgraph/sample.h"

namespace symgraph {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Num(double v, const char* format = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

double Diagonal(const Layout& l) {
  const BoundingBox box = BoundsOf(l.positions);
  return std::hypot(box.width(), box.height());
}

fs::path ScratchDir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() /
                       ("symgraph_accept_" + tag + "_" +
                        std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::map<std::string, std::string> Tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    out[fs::relative(e.path(), root).string()] = ss.str();
  }
  return out;
}

Outcome GeneratorSoundness() {
  constexpr int kPerClass = 1000;
  constexpr double kTol = 1e-9;
  const auto start = Clock::now();
  int checked = 0;
  int failures = 0;
  std::string first;
  for (LayoutClass c : kAllLayoutClasses) {
    if (!IsSymmetricClass(c)) continue;
    for (int i = 0; i < kPerClass; ++i) {
      const Sample s = GenerateSample(c, DeriveSeed(101, i), i);
      bool ok = false;
      switch (c) {
        case LayoutClass::kRotationalLarge:
          ok = s.rotation_order >= 2 &&
               testing::BfRotationAboutOrigin(s.canonical, s.rotation_order,
                                              kTol);
          break;
        case LayoutClass::kTranslationalLarge:
          ok = testing::BfTranslationHalves(s.canonical, kTol);
          break;
        default:
          ok = testing::BfMirrorAboutYAxis(s.canonical, kTol);
          break;
      }
      ++checked;
      if (!ok && failures++ == 0) {
        first = std::string(LayoutClassName(c)) + " #" + std::to_string(i);
      }
    }
  }
  const double secs = Seconds(start);
  Outcome o;
  o.pass = failures == 0 && secs < 120.0;
  o.detail = std::to_string(checked) + " samples, " +
             std::to_string(failures) + " failures" +
             (first.empty() ? "" : " (first: " + first + ")") +
             ", " + Num(secs, "%.1f") + " s";
  return o;
}

Outcome NonSymmetricSoundness() {
  struct Group {
    std::string name;
    LayoutClass label;
    int stride;
    int offset;
  };
  const Group groups[] = {
      {"SmallNonSym", LayoutClass::kSmallNonSym, 1, 0},
      {"NonSymLarge", LayoutClass::kNonSymLarge, 1, 0},
      {"decoy-parallel-lines", LayoutClass::kSmallNonSym, 3, 1},
      {"decoy-crossings", LayoutClass::kSmallNonSym, 3, 2},
  };
  int checked = 0;
  int failures = 0;
  std::string first;
  for (const Group& g : groups) {
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t index = static_cast<std::int64_t>(i) * g.stride +
                                 g.offset;
      const Sample s = GenerateSample(g.label, DeriveSeed(202, index), index);
      const bool variant_ok =
          g.stride == 1 || s.variant == g.name;
      const bool mirrored =
          testing::BfAnyMirror(s.layout, 0.02 * Diagonal(s.layout));
      ++checked;
      if ((mirrored || !variant_ok) && failures++ == 0) {
        first = g.name + " #" + std::to_string(index);
      }
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(checked) + " samples, " +
             std::to_string(failures) + " mirror-symmetric at 0.02 diagonal" +
             (first.empty() ? "" : " (first: " + first + ")");
  return o;
}

Outcome EdgeBounds() {
  constexpr int kTotal = 10000;
  const int classes = static_cast<int>(std::size(kAllLayoutClasses));
  int violations = 0;
  int with_connecting = 0;
  std::string first;
  for (int k = 0; k < kTotal; ++k) {
    const LayoutClass c = kAllLayoutClasses[k % classes];
    const int index = k / classes;
    const Sample s = GenerateSample(c, DeriveSeed(303, k), index);
    const int n = s.layout.graph.num_vertices();
    const int m = s.layout.graph.num_edges();
    bool ok = m >= n && m <= n * 6 / 5;
    if (s.connecting_edges >= 0) {
      ++with_connecting;
      ok = ok && s.connecting_edges >= 1 && s.connecting_edges <= n / 3;
    }
    if (!ok && violations++ == 0) {
      first = std::string(LayoutClassName(c)) + " n=" + std::to_string(n) +
              " m=" + std::to_string(m) +
              " k=" + std::to_string(s.connecting_edges);
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(kTotal) + " samples (" +
             std::to_string(with_connecting) + " with connecting edges), " +
             std::to_string(violations) + " violations" +
             (first.empty() ? "" : " (first: " + first + ")");
  return o;
}

using PixelSet = std::set<std::pair<int, int>>;

PixelSet Ink(const RasterImage& image) {
  PixelSet out;
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      if (image.at(x, y) == kBlack) out.insert({x, y});
    }
  }
  return out;
}

void AddBlock(PixelSet& s, int cx, int cy) {
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) s.insert({cx + dx, cy + dy});
  }
}

Outcome RasterBitExactness() {
  std::vector<std::string> failed;

  // Axis-aligned two-vertex layout fitted to the canvas.
  {
    Layout l;
    l.graph = Graph(2);
    l.graph.AddEdge(0, 1);
    l.positions = {{-1, 0}, {1, 0}};
    PixelSet expected;
    AddBlock(expected, 6, 100);
    AddBlock(expected, 194, 100);
    for (int x = 6; x <= 194; ++x) expected.insert({x, 100});
    if (Ink(Rasterize(l)) != expected) failed.push_back("two-vertex");
  }
  // A lone vertex at the view center.
  {
    Layout l;
    l.graph = Graph(1);
    l.positions = {{0, 0}};
    ViewTransform v;
    v.scale = 1;
    v.pixel_center = {100, 100};
    PixelSet expected;
    AddBlock(expected, 100, 100);
    if (Ink(Rasterize(l, v)) != expected) failed.push_back("vertex-block");
  }
  // Horizontal edge from (50,100) to (150,100).
  {
    Layout l;
    l.graph = Graph(2);
    l.graph.AddEdge(0, 1);
    l.positions = {{-50, 0}, {50, 0}};
    ViewTransform v;
    v.scale = 1;
    v.pixel_center = {100, 100};
    PixelSet expected;
    AddBlock(expected, 50, 100);
    AddBlock(expected, 150, 100);
    for (int x = 50; x <= 150; ++x) expected.insert({x, 100});
    if (Ink(Rasterize(l, v)) != expected) failed.push_back("horizontal-edge");
  }
  // Centered single mirror pair of vertical edges.
  {
    Layout l;
    l.graph = Graph(4);
    l.graph.AddEdge(0, 1);
    l.graph.AddEdge(2, 3);
    l.positions = {{0.5, -1}, {0.5, 1}, {-0.5, -1}, {-0.5, 1}};
    PixelSet expected;
    for (int x : {53, 147}) {
      for (int y = 6; y <= 194; ++y) expected.insert({x, y});
      AddBlock(expected, x, 6);
      AddBlock(expected, x, 194);
    }
    const RasterImage image = Rasterize(l);
    if (Ink(image) != expected) failed.push_back("mirror-pair");
    if (DecodePng(EncodePng(image)) != image) failed.push_back("png-roundtrip");
  }

  // Full rebuild from the same seed into two directories.
  std::int64_t files = 0;
  for (const char* recipe : {"SPBC", "LRefRotTra"}) {
    const fs::path a = ScratchDir(std::string("a_") + recipe);
    const fs::path b = ScratchDir(std::string("b_") + recipe);
    BuildOptions options;
    options.recipe = recipe;
    options.seed = 404;
    options.scale = 0.004;
    options.out_dir = a;
    BuildDataset(options);
    options.out_dir = b;
    options.workers = 1;
    BuildDataset(options);
    const auto ta = Tree(a);
    const auto tb = Tree(b);
    files += static_cast<std::int64_t>(ta.size());
    if (ta.empty() || ta != tb) failed.push_back(std::string("rebuild-") + recipe);
    fs::remove_all(a);
    fs::remove_all(b);
  }

  Outcome o;
  o.pass = failed.empty();
  o.detail = "5 fixtures, 2 rebuilds (" + std::to_string(files) +
             " files each side)";
  for (const auto& f : failed) o.detail += ", mismatch: " + f;
  return o;
}

Layout RandomSmallLayout(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  Layout l;
  l.graph = Graph(n);
  while (l.graph.num_edges() < m) {
    const int u = UniformInt(rng, 0, n - 1);
    const int v = UniformInt(rng, 0, n - 1);
    if (u != v) l.graph.AddEdge(u, v);
  }
  for (int i = 0; i < n; ++i) {
    l.positions.push_back({UniformReal(rng, -1, 1), UniformReal(rng, -1, 1)});
  }
  return l;
}

Outcome MetricVersusBruteForce() {
  std::vector<Layout> suite;
  for (int n = 2; n <= 6; ++n) {
    const int max_m = n * (n - 1) / 2;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      suite.push_back(RandomSmallLayout(
          n, 1 + static_cast<int>(seed % max_m), DeriveSeed(505, seed * 7 + n)));
    }
  }
  // Generated small drawings with exact and near symmetries.
  for (int i = 0; i < 400 && suite.size() < 400; ++i) {
    for (LayoutClass c : {LayoutClass::kSmallSym, LayoutClass::kSmallNonSym}) {
      const Sample s = GenerateSample(c, DeriveSeed(506, i), i);
      if (s.layout.num_vertices() <= 6) suite.push_back(s.layout);
    }
  }
  double worst = 0.0;
  int mismatches = 0;
  for (const Layout& l : suite) {
    const double dp = std::abs(PurchaseStyleScore(l).value -
                               testing::BruteForcePurchase(l, kPurchaseTolerance));
    const double dk =
        std::abs(KlapaukhStyleScore(l).value - testing::BruteForceKlapaukh(l));
    worst = std::max({worst, dp, dk});
    if (dp > 1e-9 || dk > 1e-9) ++mismatches;
  }
  Outcome o;
  o.pass = suite.size() >= 200 && mismatches == 0;
  o.detail = std::to_string(suite.size()) + " layouts with n <= 6, " +
             std::to_string(mismatches) + " mismatches, max difference " +
             Num(worst);
  return o;
}

Outcome MetricClassifierBaseline() {
  const auto start = Clock::now();
  const fs::path dir = ScratchDir("baseline");
  BuildOptions options;
  options.recipe = "SPBC";
  options.seed = 606;
  options.scale = 0.125;
  options.out_dir = dir;
  const BuildSummary built = BuildDataset(options);
  const Manifest manifest = ReadManifest(built.manifest);

  std::vector<ClassifierRow> rows;
  for (MetricKind metric : {MetricKind::kPurchase, MetricKind::kKlapaukh}) {
    std::vector<Prediction> predictions;
    for (const ScoreRecord& r : ScoreDataset(manifest, metric)) {
      SymmetryScore score;
      score.value = r.value;
      const Verdict verdict = ClassifyByScore(score, kDefaultThreshold);
      predictions.push_back({std::string(VerdictName(verdict)),
                             BinaryLabel(*ParseLayoutClass(r.label))});
    }
    rows.push_back(
        MakeRow(std::string(MetricName(metric)), EvaluateBinary(predictions)));
  }
  fs::remove_all(dir);
  const double secs = Seconds(start);

  Outcome o;
  o.pass = built.samples == 2000 && secs < 300.0 &&
           rows[0].accuracy >= 0.70 && rows[1].accuracy >= 0.70 &&
           rows[0].recall >= 0.85;
  o.detail = std::to_string(built.samples) + " samples; ";
  for (const auto& row : rows) {
    o.detail += row.name + " accuracy " + Num(row.accuracy, "%.3f") +
                " precision " + Num(row.precision, "%.3f") + " recall " +
                Num(row.recall, "%.3f") + "; ";
  }
  o.detail += Num(secs, "%.1f") + " s";
  return o;
}

Layout Scaled(const Layout& l, double f) {
  Layout out = l;
  for (Point& p : out.positions) p = p * f;
  return out;
}

// Average ranks, so tied values share a rank.
std::vector<double> Ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double Pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

Outcome Invariance() {
  std::vector<Layout> layouts;
  for (int i = 0; i < 25; ++i) {
    layouts.push_back(
        GenerateSample(LayoutClass::kSmallSym, DeriveSeed(707, i), i).layout);
    layouts.push_back(
        GenerateSample(LayoutClass::kSmallNonSym, DeriveSeed(708, i), i)
            .layout);
  }

  // Rotation: score drift, and the best axis rotated back must be one of the
  // base layout's maximal axes.
  double drift = 0.0;
  double axis_shift_deg = 0.0;
  for (const Layout& l : layouts) {
    for (MetricKind metric : {MetricKind::kPurchase, MetricKind::kKlapaukh}) {
      const SymmetryScore base = ScoreLayout(l, metric);
      const testing::BfBest maximal =
          metric == MetricKind::kPurchase
              ? testing::BruteForcePurchaseBest(l, kPurchaseTolerance)
              : testing::BruteForceKlapaukhBest(l);
      for (int k = 0; k < 36; ++k) {
        const double angle = 10.0 * k;
        const SymmetryScore turned = ScoreLayout(RotateLayout(l, angle), metric);
        drift = std::max(drift, std::abs(turned.value - base.value));
        if (base.best_axis.has_value() != turned.best_axis.has_value()) {
          axis_shift_deg = 180.0;
        } else if (turned.best_axis) {
          double nearest = 90.0;
          for (double theta : maximal.thetas) {
            nearest = std::min(
                nearest, RadToDeg(AxisAngleDistance(
                             turned.best_axis->theta - DegToRad(angle), theta)));
          }
          axis_shift_deg = std::max(axis_shift_deg, nearest);
        }
      }
    }
  }

  double scale_drift = 0.0;
  for (const Layout& l : layouts) {
    for (MetricKind metric : {MetricKind::kPurchase, MetricKind::kKlapaukh}) {
      const double base = ScoreLayout(l, metric).value;
      for (double f : {1e-3, 0.5, 7.0, 1e3}) {
        scale_drift = std::max(
            scale_drift, std::abs(ScoreLayout(Scaled(l, f), metric).value - base));
      }
    }
  }

  // Perturbation of a fixed symmetric layout with growing magnitude.
  const Layout fixed =
      GenerateSample(LayoutClass::kReflectionalLarge, DeriveSeed(709, 0), 0)
          .layout;
  const int moved = (fixed.num_vertices() + 4) / 5;
  const double magnitudes[] = {0.0, 0.01, 0.02, 0.04, 0.08, 0.16};
  std::vector<double> xs, ys;
  std::vector<double> means(std::size(magnitudes), 0.0);
  for (int seed = 0; seed < 100; ++seed) {
    for (std::size_t k = 0; k < std::size(magnitudes); ++k) {
      Rng rng(DeriveSeed(710, static_cast<std::uint64_t>(seed)));
      const Layout p =
          PerturbVertices(fixed, moved, magnitudes[k], magnitudes[k], rng);
      const double v = PurchaseStyleScore(p).value;
      xs.push_back(magnitudes[k]);
      ys.push_back(v);
      means[k] += v / 100.0;
    }
  }
  const double rho = Pearson(Ranks(xs), Ranks(ys));
  const double df = static_cast<double>(xs.size()) - 2.0;
  const double t = rho * std::sqrt(df / std::max(1e-300, 1.0 - rho * rho));
  const boost::math::students_t dist(df);
  const double p_value = 2.0 * boost::math::cdf(boost::math::complement(
                                   dist, std::abs(t)));

  Outcome o;
  o.pass = drift <= 0.02 && axis_shift_deg <= 2.0 && scale_drift <= 1e-9 &&
           rho < 0.0 && p_value < 0.01;
  o.detail = "rotation drift " + Num(drift) + " (36 angles x 50 layouts, axis shift " +
             Num(axis_shift_deg) + " deg), scale drift " + Num(scale_drift) +
             ", perturbation spearman " + Num(rho, "%.3f") + " p " +
             Num(p_value) + ", mean score by magnitude";
  for (double m : means) o.detail += " " + Num(m, "%.3f");
  return o;
}

}  // namespace
}  // namespace symgraph

int main() {
  using symgraph::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"generator soundness", symgraph::GeneratorSoundness},
      {"non-symmetric soundness", symgraph::NonSymmetricSoundness},
      {"edge bounds", symgraph::EdgeBounds},
      {"raster bit-exactness", symgraph::RasterBitExactness},
      {"metric vs brute force", symgraph::MetricVersusBruteForce},
      {"metric classifier baseline", symgraph::MetricClassifierBaseline},
      {"invariance suite", symgraph::Invariance},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
