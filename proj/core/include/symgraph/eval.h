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

#ifndef SYMGRAPH_EVAL_H_
#define SYMGRAPH_EVAL_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symgraph/layout.h"
#include "symgraph/metrics.h"

namespace symgraph {

struct LabeledItem {
  std::string id;
  std::string label;

  bool operator==(const LabeledItem&) const = default;
};

struct SplitSpec {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;
  std::uint64_t seed = 0;
  // Exact (train, validation, test) totals; overrides the fractions. The
  // three counts must sum to the number of items.
  std::optional<std::array<std::int64_t, 3>> counts;
};

struct SplitResult {
  std::vector<LabeledItem> train;
  std::vector<LabeledItem> validation;
  std::vector<LabeledItem> test;
};

// Stratified, seed-deterministic partition. Split totals follow the
// fractions (or counts); each class gets its proportional share, rounded by
// largest remainder. Items keep their input order within each part.
// Classes with fewer than 10 items are invalid-argument.
SplitResult Split(std::span<const LabeledItem> items, const SplitSpec& spec);

// Rows are predicted classes, columns actual classes.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::vector<std::string> classes);

  const std::vector<std::string>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }

  // Unknown labels are invalid-argument.
  void Add(const std::string& predicted, const std::string& actual,
           std::int64_t count = 1);
  std::int64_t at(int predicted, int actual) const;
  int IndexOf(const std::string& label) const;

  std::int64_t total() const;
  std::int64_t trace() const;
  std::int64_t RowSum(int predicted) const;
  std::int64_t ColumnSum(int actual) const;

 private:
  std::vector<std::string> classes_;
  std::vector<std::int64_t> counts_;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// 2 r p / (p + r), or 0 when p + r == 0.
double F1Score(double precision, double recall);

struct EvalReport {
  ConfusionMatrix confusion{{}};
  double accuracy = 0.0;
  std::vector<ClassMetrics> per_class;  // in confusion.classes() order
  std::optional<std::string> positive_class;
  std::optional<ClassMetrics> positive;
};

struct Prediction {
  std::string predicted;
  std::string actual;
};

EvalReport Evaluate(std::span<const Prediction> predictions,
                    std::vector<std::string> classes,
                    std::optional<std::string> positive_class = std::nullopt);
EvalReport EvaluateConfusion(ConfusionMatrix confusion,
                             std::optional<std::string> positive_class);

inline constexpr const char* kSymmetricLabel = "symmetric";
inline constexpr const char* kNonSymmetricLabel = "non-symmetric";

// Binary task with "symmetric" as the positive class.
EvalReport EvaluateBinary(std::span<const Prediction> predictions);
std::string BinaryLabel(LayoutClass c);

struct ClassifierRow {
  std::string name;
  std::int64_t samples = 0;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

ClassifierRow MakeRow(const std::string& name, const EvalReport& report);

struct NamedScorer {
  std::string name;
  std::function<SymmetryScore(const Layout&)> score;
};

struct NamedPredictions {
  std::string name;
  std::vector<Prediction> predictions;
};

// One row per metric classifier (score >= threshold votes symmetric) over
// `test_set`, plus an optional row for externally produced predictions.
std::vector<ClassifierRow> CompareMetricsReport(
    std::span<const Layout> test_set, std::span<const NamedScorer> scorers,
    const std::optional<NamedPredictions>& learned = std::nullopt,
    double threshold = kDefaultThreshold);

// Percentages as integers, measures to two decimals.
std::string FormatComparisonTable(std::span<const ClassifierRow> rows);
// One JSON object per line.
std::string FormatComparisonRecords(std::span<const ClassifierRow> rows);
std::string FormatConfusion(const ConfusionMatrix& confusion);

}  // namespace symgraph

#endif  // SYMGRAPH_EVAL_H_
