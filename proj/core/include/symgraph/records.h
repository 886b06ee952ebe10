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


// Line-delimited JSON records shared by the dataset builder, the scorer, the
// report generator and external classifiers.
//
//   layout record      one per sample in <out>/layouts/<id>.json
//   manifest           header line, then one sample line per id, sorted
//   score record       one per sample and metric
//   prediction record  {"id", "predicted"[, "actual"]} from any classifier
//   split record       {"id", "label", "split"} with split in
//                      train | validation | test

#ifndef SYMGRAPH_RECORDS_H_
#define SYMGRAPH_RECORDS_H_

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symgraph/layout.h"
#include "symgraph/metrics.h"

namespace symgraph {

struct LayoutRecord {
  std::string id;
  Layout layout;
  std::string variant;
  int connecting_edges = -1;
  int rotation_order = 0;
};

// Coordinates and rotation are written with exactly six decimals.
std::string SerializeLayoutRecord(const LayoutRecord& record);
// Errors: parse-error on malformed input.
LayoutRecord ParseLayoutRecord(std::string_view line);

// Rounds coordinates to the six-decimal grid used by SerializeLayoutRecord.
Layout QuantizeLayout(const Layout& layout);

struct ManifestRecord {
  std::string id;
  LayoutClass label = LayoutClass::kSmallSym;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  double rotation_deg = 0.0;
  std::string image;   // relative to the manifest directory
  std::string layout;  // relative to the manifest directory
  std::string image_hash;  // FNV-1a 64 of the PNG bytes, 16 hex digits
  std::string variant;
  int connecting_edges = -1;
  int rotation_order = 0;
};

std::string SerializeManifestRecord(const ManifestRecord& record);
ManifestRecord ParseManifestRecord(std::string_view line);

struct Manifest {
  nlohmann::json header;
  std::vector<ManifestRecord> records;
  std::filesystem::path directory;
};

// Errors: io-error when unreadable, parse-error on malformed lines.
Manifest ReadManifest(const std::filesystem::path& path);

struct ScoreRecord {
  std::string id;
  std::string label;  // layout class name
  std::string metric;
  double value = 0.0;
  std::optional<double> theta;
  std::optional<double> rho;
  int support = 0;
};

ScoreRecord MakeScoreRecord(const std::string& id, LayoutClass label,
                            MetricKind metric, const SymmetryScore& score);
std::string SerializeScoreRecord(const ScoreRecord& record);
ScoreRecord ParseScoreRecord(std::string_view line);

struct PredictionRecord {
  std::string id;
  std::string predicted;
  std::optional<std::string> actual;
};

PredictionRecord ParsePredictionRecord(std::string_view line);
std::string SerializePredictionRecord(const PredictionRecord& record);

struct SplitRecord {
  std::string id;
  std::string label;
  std::string split;
};

std::string SerializeSplitRecord(const SplitRecord& record);
SplitRecord ParseSplitRecord(std::string_view line);

// Non-empty lines of a text file. Errors: io-error.
std::vector<std::string> ReadLines(const std::filesystem::path& path);

std::uint64_t Fnv1a64(std::span<const std::uint8_t> bytes);
std::string HexDigest(std::uint64_t value);

}  // namespace symgraph

#endif  // SYMGRAPH_RECORDS_H_
