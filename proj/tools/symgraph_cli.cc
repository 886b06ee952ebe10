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


// symgraph: build, verify, score, split and report on layout datasets.
//
// Exit codes: 0 success, 1 verification or expectation failure, 2 usage or
// runtime error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symgraph/dataset.h"
#include "symgraph/error.h"
#include "symgraph/eval.h"
#include "symgraph/records.h"

namespace {

using namespace symgraph;
namespace fs = std::filesystem;

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

// Writes to `path`, or stdout when empty.
void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
}

int RunBuild(const BuildOptions& options) {
  const BuildSummary s = BuildDataset(options);
  fmt::print("built {} samples into {} ({} files written, {} unchanged)\n",
             s.samples, options.out_dir.string(), s.files_written,
             s.files_unchanged);
  fmt::print("manifest: {}\n", s.manifest.string());
  return 0;
}

int RunVerify(const std::string& manifest, int workers) {
  const VerifyReport report = VerifyDataset(manifest, workers);
  for (const Violation& v : report.violations) {
    fmt::print("VIOLATION {} [{}] {}\n", v.id, v.kind, v.message);
  }
  fmt::print("verified {} samples: {} violations\n", report.samples,
             report.violations.size());
  return report.ok() ? 0 : kExitFailure;
}

int RunScore(const std::string& manifest_path, const std::string& metric_name,
             const std::string& out, int workers) {
  const auto metric = ParseMetric(metric_name);
  if (!metric) ThrowInvalidArgument("unknown metric " + metric_name);
  const Manifest manifest = ReadManifest(manifest_path);
  std::string text;
  for (const ScoreRecord& r : ScoreDataset(manifest, *metric, workers)) {
    text += SerializeScoreRecord(r) + "\n";
  }
  Emit(out, text);
  return 0;
}

int RunSplit(const std::string& manifest_path, std::uint64_t seed,
             const std::vector<std::int64_t>& counts, const std::string& out) {
  const Manifest manifest = ReadManifest(manifest_path);
  std::vector<LabeledItem> items;
  for (const ManifestRecord& r : manifest.records) {
    items.push_back({r.id, std::string(LayoutClassName(r.label))});
  }
  SplitSpec spec;
  spec.seed = seed;
  if (!counts.empty()) {
    if (counts.size() != 3) ThrowInvalidArgument("--counts takes three values");
    spec.counts = std::array<std::int64_t, 3>{counts[0], counts[1], counts[2]};
  }
  const SplitResult split = Split(items, spec);
  std::map<std::string, std::string> part;
  for (const auto& it : split.train) part[it.id] = "train";
  for (const auto& it : split.validation) part[it.id] = "validation";
  for (const auto& it : split.test) part[it.id] = "test";
  std::string text;
  for (const LabeledItem& it : items) {
    text += SerializeSplitRecord({it.id, it.label, part[it.id]}) + "\n";
  }
  Emit(out, text);
  fmt::print(stderr, "split {}: {} train / {} validation / {} test\n",
             manifest_path, split.train.size(), split.validation.size(),
             split.test.size());
  return 0;
}

struct ReportOptions {
  std::vector<std::string> scores;
  double threshold = kDefaultThreshold;
  std::vector<std::string> predictions;
  std::vector<std::string> names;
  std::string split;
  std::string subset = "test";
  std::string expect;
  std::string records_out;
};

bool IsBinaryLabel(const std::string& s) {
  return s == kSymmetricLabel || s == kNonSymmetricLabel;
}

// Checks {"<row name>": {"min_accuracy": x, "min_precision": x,
// "min_recall": x, "min_f1": x}}. Returns the failed checks.
std::vector<std::string> CheckExpectations(
    const std::string& path, const std::vector<ClassifierRow>& rows) {
  const auto lines = ReadLines(path);
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  const nlohmann::json expect = nlohmann::json::parse(text);
  std::vector<std::string> failed;
  for (const auto& [name, limits] : expect.items()) {
    const auto row = std::find_if(rows.begin(), rows.end(),
                                  [&](const auto& r) { return r.name == name; });
    if (row == rows.end()) {
      failed.push_back(fmt::format("{}: no such row", name));
      continue;
    }
    const std::map<std::string, double> actual = {
        {"min_accuracy", row->accuracy},
        {"min_precision", row->precision},
        {"min_recall", row->recall},
        {"min_f1", row->f1}};
    for (const auto& [key, bound] : limits.items()) {
      const auto it = actual.find(key);
      if (it == actual.end()) {
        failed.push_back(fmt::format("{}: unknown expectation {}", name, key));
      } else if (it->second < bound.get<double>()) {
        failed.push_back(fmt::format("{}: {} = {:.4f} < {:.4f}", name, key,
                                     it->second, bound.get<double>()));
      }
    }
  }
  return failed;
}

int RunReport(const ReportOptions& o) {
  // Class labels for predictions that omit "actual".
  std::map<std::string, std::string> class_of;
  std::optional<std::set<std::string>> keep;
  if (!o.split.empty()) {
    keep.emplace();
    for (const auto& line : ReadLines(o.split)) {
      const SplitRecord r = ParseSplitRecord(line);
      class_of[r.id] = r.label;
      if (r.split == o.subset) keep->insert(r.id);
    }
  }
  auto kept = [&](const std::string& id) { return !keep || keep->count(id); };

  // Metric rows, in first-seen metric order.
  std::vector<std::string> metric_order;
  std::map<std::string, std::vector<Prediction>> by_metric;
  for (const std::string& path : o.scores) {
    for (const auto& line : ReadLines(path)) {
      const ScoreRecord r = ParseScoreRecord(line);
      const auto label = ParseLayoutClass(r.label);
      if (!label) ThrowInvalidArgument("unknown class " + r.label);
      class_of[r.id] = r.label;
      if (!kept(r.id)) continue;
      if (!by_metric.count(r.metric)) metric_order.push_back(r.metric);
      SymmetryScore s;
      s.value = r.value;
      by_metric[r.metric].push_back(
          {std::string(VerdictName(ClassifyByScore(s, o.threshold))),
           BinaryLabel(*label)});
    }
  }

  std::vector<ClassifierRow> rows;
  std::string extra;
  for (const auto& metric : metric_order) {
    rows.push_back(MakeRow(metric, EvaluateBinary(by_metric[metric])));
  }
  for (std::size_t p = 0; p < o.predictions.size(); ++p) {
    const std::string name =
        p < o.names.size() ? o.names[p] : fs::path(o.predictions[p]).stem().string();
    std::vector<Prediction> preds;
    bool binary = true;
    for (const auto& line : ReadLines(o.predictions[p])) {
      const PredictionRecord r = ParsePredictionRecord(line);
      if (!kept(r.id)) continue;
      std::string actual;
      if (r.actual) {
        actual = *r.actual;
      } else if (auto it = class_of.find(r.id); it != class_of.end()) {
        actual = it->second;
      } else {
        ThrowInvalidArgument("prediction " + r.id + " has no actual label");
      }
      binary = binary && IsBinaryLabel(r.predicted);
      preds.push_back({r.predicted, actual});
    }
    if (binary) {
      for (Prediction& pr : preds) {
        if (const auto c = ParseLayoutClass(pr.actual)) {
          pr.actual = BinaryLabel(*c);
        }
      }
      rows.push_back(MakeRow(name, EvaluateBinary(preds)));
    } else {
      std::vector<std::string> classes;
      for (LayoutClass c : kAllLayoutClasses) {
        const std::string cn(LayoutClassName(c));
        if (std::any_of(preds.begin(), preds.end(), [&](const Prediction& pr) {
              return pr.predicted == cn || pr.actual == cn;
            })) {
          classes.push_back(cn);
        }
      }
      const EvalReport report = Evaluate(preds, classes);
      ClassifierRow row = MakeRow(name, report);
      for (const ClassMetrics& m : report.per_class) {
        row.precision += m.precision / report.per_class.size();
        row.recall += m.recall / report.per_class.size();
        row.f1 += m.f1 / report.per_class.size();
      }
      rows.push_back(row);
      extra += fmt::format("\n{} confusion (rows predicted, columns actual):\n{}",
                           name, FormatConfusion(report.confusion));
    }
  }
  if (rows.empty()) ThrowInvalidArgument("nothing to report");

  std::cout << FormatComparisonTable(rows) << extra;
  if (!o.records_out.empty()) Emit(o.records_out, FormatComparisonRecords(rows));
  if (!o.expect.empty()) {
    const auto failed = CheckExpectations(o.expect, rows);
    for (const auto& f : failed) fmt::print("EXPECTATION FAILED {}\n", f);
    if (!failed.empty()) return kExitFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric graph layout datasets and symmetry metrics"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers,
                 "Worker threads (default: SYMGRAPH_WORKERS or all cores)");

  BuildOptions build;
  std::string out_dir;
  auto* build_cmd = app.add_subcommand("build", "Build a dataset from a recipe");
  build_cmd->add_option("--recipe", build.recipe, "Recipe name")
      ->required()
      ->check(CLI::IsMember(RecipeNames(), CLI::ignore_case));
  build_cmd->add_option("--seed", build.seed, "Base seed")->required();
  build_cmd->add_option("--scale", build.scale, "Count multiplier")
      ->default_val(1.0);
  build_cmd->add_option("--out", out_dir, "Output directory")->required();

  std::string manifest;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a built dataset");
  verify_cmd->add_option("--manifest", manifest, "Manifest path")->required();

  std::string metric;
  std::string score_out;
  auto* score_cmd = app.add_subcommand("score", "Score every sample");
  score_cmd->add_option("--manifest", manifest, "Manifest path")->required();
  score_cmd->add_option("--metric", metric, "purchase or klapaukh")
      ->required()
      ->check(CLI::IsMember({"purchase", "klapaukh"}));
  score_cmd->add_option("--out", score_out, "Output file (default stdout)");

  std::uint64_t split_seed = 0;
  std::vector<std::int64_t> counts;
  std::string split_out;
  auto* split_cmd = app.add_subcommand("split", "Stratified train/val/test split");
  split_cmd->add_option("--manifest", manifest, "Manifest path")->required();
  split_cmd->add_option("--seed", split_seed, "Split seed")->default_val(0);
  split_cmd->add_option("--counts", counts,
                        "Exact train validation test counts")
      ->expected(3);
  split_cmd->add_option("--out", split_out, "Output file (default stdout)");

  ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Classifier comparison table");
  report_cmd->add_option("--scores", report.scores, "Score record files");
  report_cmd->add_option("--threshold", report.threshold, "Symmetric if >=")
      ->default_val(kDefaultThreshold);
  report_cmd->add_option("--predictions", report.predictions,
                         "Prediction record files");
  report_cmd->add_option("--name", report.names, "Row name per predictions file");
  report_cmd->add_option("--split", report.split, "Split record file");
  report_cmd->add_option("--subset", report.subset, "Split part to evaluate")
      ->default_val("test")
      ->check(CLI::IsMember({"train", "validation", "test"}));
  report_cmd->add_option("--expect", report.expect,
                         "JSON lower bounds; exit 1 when violated");
  report_cmd->add_option("--records-out", report.records_out,
                         "Write line-delimited row records here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*build_cmd) {
      build.out_dir = out_dir;
      build.workers = workers;
      return RunBuild(build);
    }
    if (*verify_cmd) return RunVerify(manifest, workers);
    if (*score_cmd) return RunScore(manifest, metric, score_out, workers);
    if (*split_cmd) return RunSplit(manifest, split_seed, counts, split_out);
    if (*report_cmd) return RunReport(report);
  } catch (const Error& e) {
    fmt::print(stderr, "error ({}): {}\n", ErrorCodeName(e.code()), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitError;
  }
  return kExitError;
}
