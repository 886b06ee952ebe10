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


#include "symgraph/records.h"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <fstream>

#include "symgraph/error.h"

namespace symgraph {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

double Quantize(double v) {
  const double q = std::round(v * 1e6) / 1e6;
  return q == 0.0 ? 0.0 : q;  // drops the sign of negative zero
}

std::string Fixed6(double v) { return fmt::format("{:.6f}", Quantize(v)); }

Json ParseObject(std::string_view line, std::string_view what) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse,
                fmt::format("malformed {}: {}", what, e.what()));
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kParse, fmt::format("{} is not an object", what));
  }
  return j;
}

template <typename T>
T Field(const Json& j, const char* key, std::string_view what) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse,
                fmt::format("{}: bad field '{}': {}", what, key, e.what()));
  }
}

LayoutClass ClassField(const Json& j, std::string_view what) {
  const auto name = Field<std::string>(j, "label", what);
  const auto label = ParseLayoutClass(name);
  if (!label) {
    throw Error(ErrorCode::kParse,
                fmt::format("{}: unknown class '{}'", what, name));
  }
  return *label;
}

}  // namespace

Layout QuantizeLayout(const Layout& layout) {
  Layout out = layout;
  for (Point& p : out.positions) p = {Quantize(p.x), Quantize(p.y)};
  out.rotation_deg = Quantize(out.rotation_deg);
  return out;
}

std::string SerializeLayoutRecord(const LayoutRecord& record) {
  const Layout& l = record.layout;
  std::string edges;
  for (const Edge& e : l.graph.edges()) {
    if (!edges.empty()) edges += ',';
    edges += fmt::format("[{},{}]", e.u, e.v);
  }
  std::string positions;
  for (const Point& p : l.positions) {
    if (!positions.empty()) positions += ',';
    positions += fmt::format("[{},{}]", Fixed6(p.x), Fixed6(p.y));
  }
  return fmt::format(
      "{{\"id\":{},\"label\":\"{}\",\"seed\":{},\"n\":{},\"m\":{},"
      "\"edges\":[{}],\"positions\":[{}],\"rotation_deg\":{},"
      "\"variant\":{},\"connecting_edges\":{},\"rotation_order\":{}}}",
      Json(record.id).dump(), LayoutClassName(l.label), l.seed,
      l.num_vertices(), l.graph.num_edges(), edges, positions,
      Fixed6(l.rotation_deg), Json(record.variant).dump(),
      record.connecting_edges, record.rotation_order);
}

LayoutRecord ParseLayoutRecord(std::string_view line) {
  constexpr std::string_view kWhat = "layout record";
  const Json j = ParseObject(line, kWhat);
  LayoutRecord record;
  record.id = Field<std::string>(j, "id", kWhat);
  Layout& l = record.layout;
  l.label = ClassField(j, kWhat);
  l.seed = Field<std::uint64_t>(j, "seed", kWhat);
  l.rotation_deg = Field<double>(j, "rotation_deg", kWhat);
  const int n = Field<int>(j, "n", kWhat);
  const int m = Field<int>(j, "m", kWhat);
  if (n < 0) throw Error(ErrorCode::kParse, "layout record: negative n");
  try {
    l.graph = Graph(n);
    for (const auto& e : Field<std::vector<std::array<int, 2>>>(j, "edges", kWhat)) {
      l.graph.AddEdge(e[0], e[1]);
    }
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, fmt::format("layout record: {}", e.what()));
  }
  for (const auto& p :
       Field<std::vector<std::array<double, 2>>>(j, "positions", kWhat)) {
    l.positions.push_back({p[0], p[1]});
  }
  if (l.graph.num_edges() != m || static_cast<int>(l.positions.size()) != n) {
    throw Error(ErrorCode::kParse,
                "layout record: n or m disagrees with edges/positions");
  }
  record.variant = j.value("variant", "");
  record.connecting_edges = j.value("connecting_edges", -1);
  record.rotation_order = j.value("rotation_order", 0);
  return record;
}

std::string SerializeManifestRecord(const ManifestRecord& r) {
  OrderedJson j;
  j["kind"] = "sample";
  j["id"] = r.id;
  j["label"] = LayoutClassName(r.label);
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["m"] = r.m;
  j["rotation_deg"] = Quantize(r.rotation_deg);
  j["image"] = r.image;
  j["layout"] = r.layout;
  j["image_hash"] = r.image_hash;
  j["variant"] = r.variant;
  j["connecting_edges"] = r.connecting_edges;
  j["rotation_order"] = r.rotation_order;
  return j.dump();
}

ManifestRecord ParseManifestRecord(std::string_view line) {
  constexpr std::string_view kWhat = "manifest record";
  const Json j = ParseObject(line, kWhat);
  ManifestRecord r;
  r.id = Field<std::string>(j, "id", kWhat);
  r.label = ClassField(j, kWhat);
  r.seed = Field<std::uint64_t>(j, "seed", kWhat);
  r.n = Field<int>(j, "n", kWhat);
  r.m = Field<int>(j, "m", kWhat);
  r.rotation_deg = Field<double>(j, "rotation_deg", kWhat);
  r.image = Field<std::string>(j, "image", kWhat);
  r.layout = Field<std::string>(j, "layout", kWhat);
  r.image_hash = j.value("image_hash", "");
  r.variant = j.value("variant", "");
  r.connecting_edges = j.value("connecting_edges", -1);
  r.rotation_order = j.value("rotation_order", 0);
  return r;
}

Manifest ReadManifest(const std::filesystem::path& path) {
  Manifest manifest;
  manifest.directory = path.parent_path();
  for (const std::string& line : ReadLines(path)) {
    const Json j = ParseObject(line, "manifest line");
    if (j.value("kind", "") == "header") {
      manifest.header = j;
    } else {
      manifest.records.push_back(ParseManifestRecord(line));
    }
  }
  if (manifest.header.is_null()) {
    throw Error(ErrorCode::kParse, "manifest has no header line");
  }
  return manifest;
}

ScoreRecord MakeScoreRecord(const std::string& id, LayoutClass label,
                            MetricKind metric, const SymmetryScore& score) {
  ScoreRecord r;
  r.id = id;
  r.label = std::string(LayoutClassName(label));
  r.metric = std::string(MetricName(metric));
  r.value = score.value;
  if (score.best_axis) {
    r.theta = score.best_axis->theta;
    r.rho = score.best_axis->rho;
  }
  r.support = score.support;
  return r;
}

std::string SerializeScoreRecord(const ScoreRecord& r) {
  OrderedJson j;
  j["id"] = r.id;
  j["label"] = r.label;
  j["metric"] = r.metric;
  j["value"] = r.value;
  j["theta"] = r.theta ? OrderedJson(*r.theta) : OrderedJson(nullptr);
  j["rho"] = r.rho ? OrderedJson(*r.rho) : OrderedJson(nullptr);
  j["support"] = r.support;
  return j.dump();
}

ScoreRecord ParseScoreRecord(std::string_view line) {
  constexpr std::string_view kWhat = "score record";
  const Json j = ParseObject(line, kWhat);
  ScoreRecord r;
  r.id = Field<std::string>(j, "id", kWhat);
  r.label = Field<std::string>(j, "label", kWhat);
  r.metric = Field<std::string>(j, "metric", kWhat);
  r.value = Field<double>(j, "value", kWhat);
  if (j.contains("theta") && !j["theta"].is_null()) {
    r.theta = Field<double>(j, "theta", kWhat);
  }
  if (j.contains("rho") && !j["rho"].is_null()) {
    r.rho = Field<double>(j, "rho", kWhat);
  }
  r.support = j.value("support", 0);
  return r;
}

PredictionRecord ParsePredictionRecord(std::string_view line) {
  constexpr std::string_view kWhat = "prediction record";
  const Json j = ParseObject(line, kWhat);
  PredictionRecord r;
  r.id = Field<std::string>(j, "id", kWhat);
  r.predicted = Field<std::string>(j, "predicted", kWhat);
  if (j.contains("actual") && !j["actual"].is_null()) {
    r.actual = Field<std::string>(j, "actual", kWhat);
  }
  return r;
}

std::string SerializePredictionRecord(const PredictionRecord& r) {
  OrderedJson j;
  j["id"] = r.id;
  j["predicted"] = r.predicted;
  if (r.actual) j["actual"] = *r.actual;
  return j.dump();
}

std::string SerializeSplitRecord(const SplitRecord& r) {
  OrderedJson j;
  j["id"] = r.id;
  j["label"] = r.label;
  j["split"] = r.split;
  return j.dump();
}

SplitRecord ParseSplitRecord(std::string_view line) {
  constexpr std::string_view kWhat = "split record";
  const Json j = ParseObject(line, kWhat);
  SplitRecord r{Field<std::string>(j, "id", kWhat),
                Field<std::string>(j, "label", kWhat),
                Field<std::string>(j, "split", kWhat)};
  if (r.split != "train" && r.split != "validation" && r.split != "test") {
    throw Error(ErrorCode::kParse, "split record: unknown split " + r.split);
  }
  return r;
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) {
      lines.push_back(line);
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path.string());
  return lines;
}

std::uint64_t Fnv1a64(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string HexDigest(std::uint64_t value) {
  return fmt::format("{:016x}", value);
}

}  // namespace symgraph
