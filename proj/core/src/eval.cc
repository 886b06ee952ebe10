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

#include "symgraph/eval.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <utility>

#include "symgraph/error.h"
#include "symgraph/random.h"

namespace symgraph {

namespace {

constexpr std::int64_t kMinPerClass = 10;

// Distributes `total` over classes proportionally to `sizes`, never giving a
// class more than `caps[c]`. Largest remainder, ties to the earlier class.
std::vector<std::int64_t> Apportion(std::int64_t total,
                                    const std::vector<std::int64_t>& sizes,
                                    const std::vector<std::int64_t>& caps) {
  const std::int64_t population =
      std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
  std::vector<std::int64_t> out(sizes.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::int64_t assigned = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const double quota =
        static_cast<double>(total) * sizes[c] / static_cast<double>(population);
    out[c] = std::min(caps[c], static_cast<std::int64_t>(std::floor(quota)));
    assigned += out[c];
    remainders.emplace_back(quota - std::floor(quota), c);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  while (assigned < total) {
    bool progressed = false;
    for (const auto& [frac, c] : remainders) {
      if (assigned == total) break;
      if (out[c] < caps[c]) {
        ++out[c];
        ++assigned;
        progressed = true;
      }
    }
    if (!progressed) ThrowInvalidArgument("split counts exceed class sizes");
  }
  return out;
}

}  // namespace

SplitResult Split(std::span<const LabeledItem> items, const SplitSpec& spec) {
  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < items.size(); ++i) {
    by_class[items[i].label].push_back(i);
  }
  for (const auto& [label, members] : by_class) {
    if (static_cast<std::int64_t>(members.size()) < kMinPerClass) {
      ThrowInvalidArgument("class '" + label + "' has " +
                           std::to_string(members.size()) +
                           " samples; at least 10 are required");
    }
  }
  const auto n = static_cast<std::int64_t>(items.size());
  std::array<std::int64_t, 3> totals{};
  if (spec.counts) {
    totals = *spec.counts;
    if (totals[0] < 0 || totals[1] < 0 || totals[2] < 0 ||
        totals[0] + totals[1] + totals[2] != n) {
      ThrowInvalidArgument("split counts must be non-negative and sum to " +
                           std::to_string(n));
    }
  } else {
    if (spec.train < 0 || spec.validation < 0 || spec.test < 0 ||
        std::abs(spec.train + spec.validation + spec.test - 1.0) > 1e-9) {
      ThrowInvalidArgument("split fractions must be non-negative and sum to 1");
    }
    totals[0] = std::llround(spec.train * static_cast<double>(n));
    totals[1] = std::llround(spec.validation * static_cast<double>(n));
    totals[2] = n - totals[0] - totals[1];
  }

  std::vector<std::int64_t> sizes;
  for (const auto& [label, members] : by_class) {
    sizes.push_back(static_cast<std::int64_t>(members.size()));
  }
  const auto train = Apportion(totals[0], sizes, sizes);
  std::vector<std::int64_t> room(sizes.size());
  for (std::size_t c = 0; c < sizes.size(); ++c) room[c] = sizes[c] - train[c];
  const auto validation = Apportion(totals[1], sizes, room);

  Rng rng(spec.seed);
  std::vector<int> part(items.size(), 2);
  std::size_t c = 0;
  for (auto& [label, members] : by_class) {
    std::vector<std::size_t> order = members;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::int64_t k = 0; k < train[c]; ++k) part[order[k]] = 0;
    for (std::int64_t k = 0; k < validation[c]; ++k) {
      part[order[train[c] + k]] = 1;
    }
    ++c;
  }
  SplitResult result;
  for (std::size_t i = 0; i < items.size(); ++i) {
    (part[i] == 0   ? result.train
     : part[i] == 1 ? result.validation
                    : result.test)
        .push_back(items[i]);
  }
  return result;
}

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> classes)
    : classes_(std::move(classes)),
      counts_(classes_.size() * classes_.size(), 0) {}

int ConfusionMatrix::IndexOf(const std::string& label) const {
  const auto it = std::find(classes_.begin(), classes_.end(), label);
  if (it == classes_.end()) ThrowInvalidArgument("unknown label '" + label + "'");
  return static_cast<int>(it - classes_.begin());
}

void ConfusionMatrix::Add(const std::string& predicted,
                          const std::string& actual, std::int64_t count) {
  if (count < 0) ThrowInvalidArgument("negative confusion count");
  counts_[IndexOf(predicted) * classes_.size() + IndexOf(actual)] += count;
}

std::int64_t ConfusionMatrix::at(int predicted, int actual) const {
  return counts_[predicted * classes_.size() + actual];
}

std::int64_t ConfusionMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::int64_t ConfusionMatrix::trace() const {
  std::int64_t sum = 0;
  for (int i = 0; i < num_classes(); ++i) sum += at(i, i);
  return sum;
}

std::int64_t ConfusionMatrix::RowSum(int predicted) const {
  std::int64_t sum = 0;
  for (int j = 0; j < num_classes(); ++j) sum += at(predicted, j);
  return sum;
}

std::int64_t ConfusionMatrix::ColumnSum(int actual) const {
  std::int64_t sum = 0;
  for (int i = 0; i < num_classes(); ++i) sum += at(i, actual);
  return sum;
}

double F1Score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0 ? 2.0 * recall * precision / sum : 0.0;
}

EvalReport EvaluateConfusion(ConfusionMatrix confusion,
                             std::optional<std::string> positive_class) {
  EvalReport report;
  const std::int64_t total = confusion.total();
  if (total == 0) ThrowInvalidArgument("no predictions to evaluate");
  report.accuracy = static_cast<double>(confusion.trace()) / total;
  for (int c = 0; c < confusion.num_classes(); ++c) {
    ClassMetrics m;
    const std::int64_t hit = confusion.at(c, c);
    const std::int64_t predicted = confusion.RowSum(c);
    const std::int64_t actual = confusion.ColumnSum(c);
    m.precision = predicted > 0 ? static_cast<double>(hit) / predicted : 0.0;
    m.recall = actual > 0 ? static_cast<double>(hit) / actual : 0.0;
    m.f1 = F1Score(m.precision, m.recall);
    report.per_class.push_back(m);
  }
  if (positive_class) {
    report.positive = report.per_class[confusion.IndexOf(*positive_class)];
    report.positive_class = std::move(positive_class);
  }
  report.confusion = std::move(confusion);
  return report;
}

EvalReport Evaluate(std::span<const Prediction> predictions,
                    std::vector<std::string> classes,
                    std::optional<std::string> positive_class) {
  if (predictions.empty()) ThrowInvalidArgument("no predictions to evaluate");
  ConfusionMatrix confusion(std::move(classes));
  for (const Prediction& p : predictions) confusion.Add(p.predicted, p.actual);
  return EvaluateConfusion(std::move(confusion), std::move(positive_class));
}

EvalReport EvaluateBinary(std::span<const Prediction> predictions) {
  return Evaluate(predictions, {kSymmetricLabel, kNonSymmetricLabel},
                  kSymmetricLabel);
}

std::string BinaryLabel(LayoutClass c) {
  return IsSymmetricClass(c) ? kSymmetricLabel : kNonSymmetricLabel;
}

ClassifierRow MakeRow(const std::string& name, const EvalReport& report) {
  ClassifierRow row;
  row.name = name;
  row.samples = report.confusion.total();
  row.accuracy = report.accuracy;
  if (report.positive) {
    row.precision = report.positive->precision;
    row.recall = report.positive->recall;
    row.f1 = report.positive->f1;
  }
  return row;
}

std::vector<ClassifierRow> CompareMetricsReport(
    std::span<const Layout> test_set, std::span<const NamedScorer> scorers,
    const std::optional<NamedPredictions>& learned, double threshold) {
  std::vector<ClassifierRow> rows;
  for (const NamedScorer& scorer : scorers) {
    std::vector<Prediction> predictions;
    predictions.reserve(test_set.size());
    for (const Layout& layout : test_set) {
      const Verdict verdict = ClassifyByScore(scorer.score(layout), threshold);
      predictions.push_back(
          {std::string(VerdictName(verdict)), BinaryLabel(layout.label)});
    }
    rows.push_back(MakeRow(scorer.name, EvaluateBinary(predictions)));
  }
  if (learned) {
    rows.push_back(MakeRow(learned->name, EvaluateBinary(learned->predictions)));
  }
  return rows;
}

std::string FormatComparisonTable(std::span<const ClassifierRow> rows) {
  std::size_t name_width = 5;
  for (const auto& row : rows) name_width = std::max(name_width, row.name.size());
  std::string out = fmt::format("{:<{}}  {:>8}  {:>9}  {:>6}  {:>8}\n", "Model",
                                name_width, "Accuracy", "Precision", "Recall",
                                "F1-Score");
  for (const auto& row : rows) {
    out += fmt::format("{:<{}}  {:>7}%  {:>9.2f}  {:>6.2f}  {:>8.2f}\n",
                       row.name, name_width,
                       static_cast<long>(std::lround(row.accuracy * 100)),
                       row.precision, row.recall, row.f1);
  }
  return out;
}

std::string FormatComparisonRecords(std::span<const ClassifierRow> rows) {
  std::string out;
  for (const auto& row : rows) {
    nlohmann::ordered_json j = {
        {"kind", "classifier"},       {"name", row.name},
        {"samples", row.samples},     {"accuracy", row.accuracy},
        {"precision", row.precision}, {"recall", row.recall},
        {"f1", row.f1}};
    out += j.dump() + "\n";
  }
  return out;
}

std::string FormatConfusion(const ConfusionMatrix& confusion) {
  std::size_t width = 9;
  for (const auto& c : confusion.classes()) width = std::max(width, c.size());
  std::string out = fmt::format("{:<{}}", "predicted\\actual", width + 8);
  for (const auto& c : confusion.classes()) out += fmt::format("  {:>{}}", c, width);
  out += "\n";
  for (int i = 0; i < confusion.num_classes(); ++i) {
    out += fmt::format("{:<{}}", confusion.classes()[i], width + 8);
    for (int j = 0; j < confusion.num_classes(); ++j) {
      out += fmt::format("  {:>{}}", confusion.at(i, j), width);
    }
    out += "\n";
  }
  return out;
}

}  // namespace symgraph
