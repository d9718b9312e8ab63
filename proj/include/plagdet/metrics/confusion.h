// Copyright 2026 The plagdet Authors.
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

#ifndef PLAGDET_METRICS_CONFUSION_H_
#define PLAGDET_METRICS_CONFUSION_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace plagdet::metrics {

// counts[t][p]: samples of true class t predicted as p.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t num_classes);

  // Two-class matrix with class 1 as the positive class.
  static ConfusionMatrix binary(std::uint64_t tp, std::uint64_t tn, std::uint64_t fp,
                                std::uint64_t fn);

  // Throws kLabelOutOfRange.
  void accumulate(std::size_t true_label, std::size_t predicted_label);
  // Elementwise sum. Throws kShapeMismatch on a class-count mismatch.
  void merge(const ConfusionMatrix& other);

  std::size_t num_classes() const { return c_; }
  std::uint64_t count(std::size_t t, std::size_t p) const { return counts_[t * c_ + p]; }
  void set(std::size_t t, std::size_t p, std::uint64_t value);
  std::uint64_t total() const;
  std::uint64_t trace() const;
  std::uint64_t row_sum(std::size_t t) const;
  std::uint64_t column_sum(std::size_t p) const;

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  std::size_t c_;
  std::vector<std::uint64_t> counts_;
};

// trace / total. Throws kEmptyMatrix.
double accuracy(const ConfusionMatrix& m);

enum class Aggregation { kWeighted, kMacro };

std::string_view aggregation_name(Aggregation a);
Aggregation parse_aggregation(std::string_view name);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t support = 0;  // row sum
  // Zero-division cases, reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

struct MetricsReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  Aggregation aggregation = Aggregation::kWeighted;
  std::vector<ClassMetrics> per_class;
  std::uint64_t total = 0;
};

// One-vs-rest precision, recall and F1 per class, then averaged weighted by
// support or unweighted. The aggregate F1 is the average of the per-class F1
// values. Throws kEmptyMatrix.
MetricsReport precision_recall_f1(const ConfusionMatrix& m,
                                  Aggregation aggregation = Aggregation::kWeighted);

}  // namespace plagdet::metrics

#endif  // PLAGDET_METRICS_CONFUSION_H_
