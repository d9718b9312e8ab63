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

#include "plagdet/metrics/confusion.h"

#include <string>

#include "plagdet/common/error.h"

namespace plagdet::metrics {

ConfusionMatrix::ConfusionMatrix(std::size_t num_classes)
    : c_(num_classes), counts_(num_classes * num_classes, 0) {
  if (num_classes == 0) throw Error(ErrorCode::kInvalidArgument, "class count must be >= 1");
}

ConfusionMatrix ConfusionMatrix::binary(std::uint64_t tp, std::uint64_t tn, std::uint64_t fp,
                                        std::uint64_t fn) {
  ConfusionMatrix m(2);
  m.set(1, 1, tp);
  m.set(0, 0, tn);
  m.set(0, 1, fp);
  m.set(1, 0, fn);
  return m;
}

void ConfusionMatrix::accumulate(std::size_t true_label, std::size_t predicted_label) {
  if (true_label >= c_ || predicted_label >= c_) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "label pair (" + std::to_string(true_label) + ", " +
                    std::to_string(predicted_label) + ") outside " + std::to_string(c_) +
                    " classes");
  }
  ++counts_[true_label * c_ + predicted_label];
}

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
  if (other.c_ != c_) throw Error(ErrorCode::kShapeMismatch, "class counts differ");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
}

void ConfusionMatrix::set(std::size_t t, std::size_t p, std::uint64_t value) {
  if (t >= c_ || p >= c_) throw Error(ErrorCode::kLabelOutOfRange, "cell outside matrix");
  counts_[t * c_ + p] = value;
}

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t s = 0;
  for (auto v : counts_) s += v;
  return s;
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < c_; ++i) s += count(i, i);
  return s;
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t t) const {
  std::uint64_t s = 0;
  for (std::size_t p = 0; p < c_; ++p) s += count(t, p);
  return s;
}

std::uint64_t ConfusionMatrix::column_sum(std::size_t p) const {
  std::uint64_t s = 0;
  for (std::size_t t = 0; t < c_; ++t) s += count(t, p);
  return s;
}

double accuracy(const ConfusionMatrix& m) {
  const std::uint64_t total = m.total();
  if (total == 0) throw Error(ErrorCode::kEmptyMatrix, "confusion matrix is empty");
  return static_cast<double>(m.trace()) / static_cast<double>(total);
}

std::string_view aggregation_name(Aggregation a) {
  return a == Aggregation::kMacro ? "macro" : "weighted";
}

Aggregation parse_aggregation(std::string_view name) {
  if (name == "weighted") return Aggregation::kWeighted;
  if (name == "macro") return Aggregation::kMacro;
  throw Error(ErrorCode::kInvalidArgument, "unknown aggregation '" + std::string(name) + "'");
}

MetricsReport precision_recall_f1(const ConfusionMatrix& m, Aggregation aggregation) {
  MetricsReport r;
  r.aggregation = aggregation;
  r.accuracy = accuracy(m);
  r.total = m.total();
  const std::size_t c = m.num_classes();
  r.per_class.resize(c);

  double wsum = 0.0;
  for (std::size_t k = 0; k < c; ++k) {
    ClassMetrics& cm = r.per_class[k];
    const double tp = static_cast<double>(m.count(k, k));
    const double predicted = static_cast<double>(m.column_sum(k));
    const double actual = static_cast<double>(m.row_sum(k));
    cm.support = m.row_sum(k);
    if (predicted > 0) {
      cm.precision = tp / predicted;
    } else {
      cm.precision_undefined = true;
    }
    if (actual > 0) {
      cm.recall = tp / actual;
    } else {
      cm.recall_undefined = true;
    }
    const double denom = cm.precision + cm.recall;
    cm.f1 = denom > 0 ? 2.0 * cm.precision * cm.recall / denom : 0.0;

    const double w = aggregation == Aggregation::kWeighted ? actual : 1.0;
    wsum += w;
    r.precision += w * cm.precision;
    r.recall += w * cm.recall;
    r.f1 += w * cm.f1;
  }
  r.precision /= wsum;
  r.recall /= wsum;
  r.f1 /= wsum;
  return r;
}

}  // namespace plagdet::metrics
