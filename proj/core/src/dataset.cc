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


#include "symgraph/dataset.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <thread>

#include "symgraph/error.h"
#include "symgraph/oracle.h"
#include "symgraph/random.h"
#include "symgraph/raster.h"
#include "symgraph/sample.h"

namespace symgraph {

namespace fs = std::filesystem;

namespace {

struct RecipeDef {
  const char* name;
  std::vector<RecipeClass> classes;
};

const std::vector<RecipeDef>& RecipeTable() {
  using C = LayoutClass;
  static const std::vector<RecipeDef> table = {
      {"SPBC", {{C::kSmallSym, 8000}, {C::kSmallNonSym, 8000}}},
      {"LNBC", {{C::kReflectionalLarge, 5000}, {C::kNonSymLarge, 5000}}},
      {"LHnonSym", {{C::kHorizontalLarge, 5000}, {C::kNonSymLarge, 5000}}},
      {"LVnonSym", {{C::kVerticalLarge, 5000}, {C::kNonSymLarge, 5000}}},
      {"LHVSym", {{C::kHorizontalLarge, 5000}, {C::kVerticalLarge, 5000}}},
      {"LHVRT",
       {{C::kHorizontalLarge, 12800},
        {C::kVerticalLarge, 16000},
        {C::kRotationalLarge, 8000},
        {C::kTranslationalLarge, 8000}}},
      {"LRefRotTra",
       {{C::kReflectionalLarge, 8720},
        {C::kRotationalLarge, 8000},
        {C::kTranslationalLarge, 8000}}},
  };
  return table;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Runs fn(i) for i in [0, count) on `workers` threads. The first exception
// (by index) is rethrown after all threads finish.
template <typename F>
void ParallelFor(std::int64_t count, int workers, F&& fn) {
  std::atomic<std::int64_t> next{0};
  std::mutex mu;
  std::int64_t failed_index = count;
  std::exception_ptr failure;
  auto run = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  const int threads =
      static_cast<int>(std::min<std::int64_t>(std::max(workers, 1), count));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::uint8_t> ReadBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Returns true when the file was (re)written.
bool WriteIfChanged(const fs::path& path, std::span<const std::uint8_t> bytes) {
  std::error_code ec;
  if (fs::exists(path, ec) && fs::file_size(path, ec) == bytes.size()) {
    const auto existing = ReadBytes(path);
    if (std::equal(existing.begin(), existing.end(), bytes.begin())) {
      return false;
    }
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename to " + path.string());
  return true;
}

bool WriteIfChanged(const fs::path& path, std::string_view text) {
  return WriteIfChanged(
      path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                      text.size()));
}

std::string HeaderLine(const Recipe& recipe, const BuildOptions& options) {
  nlohmann::ordered_json classes = nlohmann::ordered_json::object();
  for (const RecipeClass& c : recipe.classes) {
    classes[std::string(LayoutClassName(c.label))] = c.count;
  }
  nlohmann::ordered_json j;
  j["kind"] = "header";
  j["format"] = "symgraph-manifest";
  j["version"] = 1;
  j["command"] = "build";
  j["recipe"] = recipe.name;
  j["seed"] = options.seed;
  j["scale"] = options.scale;
  j["image_size"] = kImageSize;
  j["samples"] = recipe.total();
  j["classes"] = classes;
  return j.dump();
}

}  // namespace

std::int64_t Recipe::total() const {
  std::int64_t sum = 0;
  for (const RecipeClass& c : classes) sum += c.count;
  return sum;
}

std::vector<std::string> RecipeNames() {
  std::vector<std::string> names;
  for (const RecipeDef& def : RecipeTable()) names.emplace_back(def.name);
  return names;
}

Recipe GetRecipe(std::string_view name, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    ThrowInvalidArgument("scale must be positive");
  }
  for (const RecipeDef& def : RecipeTable()) {
    if (Lower(def.name) != Lower(name)) continue;
    Recipe recipe;
    recipe.name = def.name;
    for (RecipeClass c : def.classes) {
      c.count = std::llround(static_cast<double>(c.count) * scale);
      if (c.count <= 0) {
        ThrowInvalidArgument(fmt::format("scale {} leaves no {} samples", scale,
                                         LayoutClassName(c.label)));
      }
      recipe.classes.push_back(c);
    }
    return recipe;
  }
  ThrowInvalidArgument(fmt::format("unknown recipe '{}'", name));
}

std::string SampleId(std::string_view recipe, std::int64_t index) {
  return fmt::format("{}-{:08d}", Lower(recipe), index);
}

int ResolveWorkers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SYMGRAPH_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

BuiltSample BuildSample(const Recipe& recipe, std::uint64_t seed,
                        std::int64_t index) {
  std::int64_t offset = index;
  const RecipeClass* cls = nullptr;
  for (const RecipeClass& c : recipe.classes) {
    if (offset < c.count) {
      cls = &c;
      break;
    }
    offset -= c.count;
  }
  if (cls == nullptr) ThrowInvalidArgument("sample index out of range");

  const std::uint64_t sample_seed =
      DeriveSeed(seed, static_cast<std::uint64_t>(index));
  const Sample sample = GenerateSample(cls->label, sample_seed, offset);

  LayoutRecord layout_record;
  layout_record.id = SampleId(recipe.name, index);
  layout_record.layout = sample.layout;
  layout_record.variant = sample.variant;
  layout_record.connecting_edges = sample.connecting_edges;
  layout_record.rotation_order = sample.rotation_order;

  BuiltSample built;
  built.layout_text = SerializeLayoutRecord(layout_record) + "\n";
  // Rasterize what a reader of the record would see.
  const LayoutRecord stored = ParseLayoutRecord(built.layout_text);
  built.png = EncodePng(Rasterize(stored.layout));

  ManifestRecord& r = built.record;
  r.id = layout_record.id;
  r.label = cls->label;
  r.seed = sample_seed;
  r.n = stored.layout.num_vertices();
  r.m = stored.layout.graph.num_edges();
  r.rotation_deg = stored.layout.rotation_deg;
  r.image = fmt::format("{}/{}.png", LayoutClassName(cls->label), r.id);
  r.layout = fmt::format("layouts/{}.json", r.id);
  r.image_hash = HexDigest(Fnv1a64(built.png));
  r.variant = sample.variant;
  r.connecting_edges = sample.connecting_edges;
  r.rotation_order = sample.rotation_order;
  return built;
}

BuildSummary BuildDataset(const BuildOptions& options) {
  const Recipe recipe = GetRecipe(options.recipe, options.scale);
  const fs::path& out = options.out_dir;
  std::error_code ec;
  fs::create_directories(out / "layouts", ec);
  for (const RecipeClass& c : recipe.classes) {
    fs::create_directories(out / std::string(LayoutClassName(c.label)), ec);
  }
  if (ec || !fs::is_directory(out / "layouts")) {
    throw Error(ErrorCode::kIo, "cannot create " + out.string());
  }

  const std::int64_t total = recipe.total();
  std::vector<std::string> lines(total);
  std::atomic<std::int64_t> written{0};
  std::atomic<std::int64_t> unchanged{0};
  ParallelFor(total, ResolveWorkers(options.workers), [&](std::int64_t i) {
    BuiltSample s = BuildSample(recipe, options.seed, i);
    for (bool changed : {WriteIfChanged(out / s.record.layout, s.layout_text),
                         WriteIfChanged(out / s.record.image, s.png)}) {
      (changed ? written : unchanged).fetch_add(1);
    }
    lines[i] = SerializeManifestRecord(s.record);
  });

  std::string manifest = HeaderLine(recipe, options) + "\n";
  for (const std::string& line : lines) manifest += line + "\n";
  BuildSummary summary;
  summary.samples = total;
  summary.manifest = out / "manifest.jsonl";
  (WriteIfChanged(summary.manifest, manifest) ? written : unchanged)
      .fetch_add(1);
  summary.files_written = written;
  summary.files_unchanged = unchanged;
  return summary;
}

std::vector<Violation> CheckLayoutRecord(const LayoutRecord& record) {
  std::vector<Violation> out;
  auto flag = [&](std::string kind, std::string message) {
    out.push_back({record.id, std::move(kind), std::move(message)});
  };
  const Layout& l = record.layout;
  const int n = l.num_vertices();
  const int m = l.graph.num_edges();
  if (m < n || m > n * 6 / 5) {
    flag("edge-bounds", fmt::format("|E| = {} outside [{}, {}]", m, n,
                                    n * 6 / 5));
  }
  if (record.connecting_edges >= 0 &&
      (record.connecting_edges < 1 || record.connecting_edges > n / 3)) {
    flag("edge-bounds", fmt::format("{} connecting edges outside [1, {}]",
                                    record.connecting_edges, n / 3));
  }
  if (n < 2) {
    flag("oracle", "fewer than two vertices");
    return out;
  }

  const double tol = kVerifyTolerance;
  constexpr double kHalfPi = 1.5707963267948966;
  const std::string_view name = LayoutClassName(l.label);
  switch (l.label) {
    case LayoutClass::kSmallSym:
    case LayoutClass::kReflectionalLarge:
      if (!ExactMirrorOracle(l, tol)) flag("oracle", "no mirror axis");
      break;
    case LayoutClass::kHorizontalLarge:
      if (!ExactMirrorOracle(l, tol, 0.0)) {
        flag("oracle", "no horizontal mirror axis");
      }
      break;
    case LayoutClass::kVerticalLarge:
      if (!ExactMirrorOracle(l, tol, kHalfPi)) {
        flag("oracle", "no vertical mirror axis");
      }
      break;
    case LayoutClass::kRotationalLarge: {
      std::optional<RotationMatch> match =
          record.rotation_order > 0
              ? ExactRotationOracle(l, record.rotation_order, tol)
              : FindRotationOrder(l, tol);
      if (!match) {
        flag("oracle", "no rotational symmetry");
      } else if (match->order < 4 || match->order > 10) {
        flag("oracle", fmt::format("rotation order {} outside [4, 10]",
                                   match->order));
      }
      break;
    }
    case LayoutClass::kTranslationalLarge:
      if (!ExactTranslationOracle(l, tol)) {
        flag("oracle", "no translational symmetry");
      }
      break;
    case LayoutClass::kSmallNonSym:
    case LayoutClass::kNonSymLarge: {
      const double nonsym_tol =
          kNonSymToleranceFraction * BoundsOf(l.positions).diagonal();
      if (ExactMirrorOracle(l, nonsym_tol)) {
        flag("oracle", fmt::format("{} layout has a mirror axis", name));
      }
      break;
    }
  }
  return out;
}

VerifyReport VerifyDataset(const fs::path& manifest_path, int workers) {
  const Manifest manifest = ReadManifest(manifest_path);
  VerifyReport report;
  report.samples = static_cast<std::int64_t>(manifest.records.size());
  std::vector<std::vector<Violation>> found(manifest.records.size());

  std::map<std::string, int> seen;
  for (const ManifestRecord& r : manifest.records) {
    if (++seen[r.id] == 2) {
      report.violations.push_back({r.id, "record", "duplicate sample id"});
    }
  }

  ParallelFor(report.samples, ResolveWorkers(workers), [&](std::int64_t i) {
    const ManifestRecord& r = manifest.records[i];
    auto& out = found[i];
    auto flag = [&](std::string kind, std::string message) {
      out.push_back({r.id, std::move(kind), std::move(message)});
    };

    LayoutRecord record;
    try {
      const auto lines = ReadLines(manifest.directory / r.layout);
      if (lines.size() != 1) throw Error(ErrorCode::kParse, "not one line");
      record = ParseLayoutRecord(lines[0]);
    } catch (const Error& e) {
      flag("record", fmt::format("layout record: {}", e.what()));
      return;
    }
    if (record.id != r.id || record.layout.label != r.label ||
        record.layout.num_vertices() != r.n ||
        record.layout.graph.num_edges() != r.m) {
      flag("record", "layout record disagrees with manifest");
    }
    // The manifest label is authoritative.
    record.layout.label = r.label;
    record.connecting_edges = r.connecting_edges;
    record.rotation_order = r.rotation_order;
    for (Violation& v : CheckLayoutRecord(record)) out.push_back(std::move(v));

    std::vector<std::uint8_t> png;
    try {
      png = ReadBytes(manifest.directory / r.image);
    } catch (const Error& e) {
      flag("image", e.what());
      return;
    }
    if (!r.image_hash.empty() && HexDigest(Fnv1a64(png)) != r.image_hash) {
      flag("image", "content hash mismatch");
    }
    RasterImage image;
    try {
      image = DecodePng(png);
    } catch (const Error& e) {
      flag("image", fmt::format("undecodable: {}", e.what()));
      return;
    }
    if (image.width != kImageSize || image.height != kImageSize) {
      flag("image", fmt::format("dimensions {}x{}, expected {}x{}",
                                image.width, image.height, kImageSize,
                                kImageSize));
      return;
    }
    if (!std::all_of(image.pixels.begin(), image.pixels.end(),
                     [](std::uint8_t v) { return v == kWhite || v == kBlack; })) {
      flag("image", "non-binary pixel values");
    }
    const ViewTransform view = FitView(record.layout);
    const int ink = image.CountInk();
    const int bound = InkUpperBound(record.layout, view);
    if (ink < 1 || ink > bound) {
      flag("image", fmt::format("ink {} outside [1, {}]", ink, bound));
    }
    if (image != Rasterize(record.layout, view)) {
      flag("image", "pixels differ from the layout's rasterization");
    }
  });
  for (auto& v : found) {
    std::move(v.begin(), v.end(), std::back_inserter(report.violations));
  }
  return report;
}

std::vector<ScoreRecord> ScoreDataset(const Manifest& manifest,
                                      MetricKind metric, int workers) {
  std::vector<ScoreRecord> scores(manifest.records.size());
  ParallelFor(static_cast<std::int64_t>(scores.size()), ResolveWorkers(workers),
              [&](std::int64_t i) {
                const ManifestRecord& r = manifest.records[i];
                const auto lines = ReadLines(manifest.directory / r.layout);
                if (lines.size() != 1) {
                  throw Error(ErrorCode::kParse, "bad layout record " + r.id);
                }
                const LayoutRecord record = ParseLayoutRecord(lines[0]);
                scores[i] = MakeScoreRecord(
                    r.id, r.label, metric, ScoreLayout(record.layout, metric));
              });
  return scores;
}

}  // namespace symgraph
