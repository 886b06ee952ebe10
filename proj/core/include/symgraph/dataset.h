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


// Recipe-driven dataset builds: generate, lay out, rasterize and record every
// sample, then write a manifest sorted by sample id.
//
// Output tree:
//   <out>/manifest.jsonl
//   <out>/layouts/<id>.json
//   <out>/<Class>/<id>.png
//
// Builds are pure functions of (recipe, seed, scale). Existing files whose
// content already matches are left untouched, so an interrupted build can be
// re-run to completion.

#ifndef SYMGRAPH_DATASET_H_
#define SYMGRAPH_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "symgraph/layout.h"
#include "symgraph/metrics.h"
#include "symgraph/records.h"

namespace symgraph {

struct RecipeClass {
  LayoutClass label;
  std::int64_t count = 0;
};

struct Recipe {
  std::string name;
  std::vector<RecipeClass> classes;

  std::int64_t total() const;
};

// Names: SPBC, LNBC, LHnonSym, LVnonSym, LHVSym, LHVRT, LRefRotTra. Counts are
// the full-size counts times `scale`, rounded to nearest.
// Errors: invalid-argument for an unknown name, a non-positive scale or a
// class count that rounds to zero.
Recipe GetRecipe(std::string_view name, double scale = 1.0);
std::vector<std::string> RecipeNames();

// "<recipe in lower case>-<index, 8 digits>".
std::string SampleId(std::string_view recipe, std::int64_t index);

struct BuildOptions {
  std::string recipe;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::filesystem::path out_dir;
  // 0 means SYMGRAPH_WORKERS, else the hardware concurrency.
  int workers = 0;
};

struct BuildSummary {
  std::int64_t samples = 0;
  std::int64_t files_written = 0;
  std::int64_t files_unchanged = 0;
  std::filesystem::path manifest;
};

BuildSummary BuildDataset(const BuildOptions& options);

// Everything stored for one sample, computed in memory.
struct BuiltSample {
  ManifestRecord record;
  std::string layout_text;  // one line, newline terminated
  std::vector<std::uint8_t> png;
};

BuiltSample BuildSample(const Recipe& recipe, std::uint64_t seed,
                        std::int64_t index);

struct Violation {
  std::string id;
  std::string kind;  // oracle | edge-bounds | image | record
  std::string message;
};

struct VerifyReport {
  std::int64_t samples = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Absolute tolerance of the symmetric-class oracles on serialized
// coordinates (six decimals, normalized to half-extent 1).
inline constexpr double kVerifyTolerance = 1e-5;

// Re-checks every sample: the class-defining oracle, edge-count bounds, the
// layout record against the manifest, and the image (decodes, 200x200,
// binary, ink within bounds, hash, identical to a fresh rasterization).
VerifyReport VerifyDataset(const std::filesystem::path& manifest_path,
                           int workers = 0);

// Checks only the class-defining oracle and the edge-count bounds.
std::vector<Violation> CheckLayoutRecord(const LayoutRecord& record);

std::vector<ScoreRecord> ScoreDataset(const Manifest& manifest,
                                      MetricKind metric, int workers = 0);

// Worker count from `requested`, SYMGRAPH_WORKERS or the hardware.
int ResolveWorkers(int requested);

}  // namespace symgraph

#endif  // SYMGRAPH_DATASET_H_
