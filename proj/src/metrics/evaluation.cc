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

#include "plagdet/metrics/evaluation.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>

#include "plagdet/common/error.h"

namespace plagdet::metrics {

using classifier::PairDataset;
using vecindex::MatrixView;
using vecindex::SearchResult;

ClassifierEvaluation evaluate_classifier_detailed(const classifier::MlpParams& params,
                                                  const PairDataset& pairs,
                                                  Aggregation aggregation) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyDataset, "test set is empty");
  ClassifierEvaluation ev;
  ev.predictions.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto pred = classifier::predict(params, pairs.first(i), pairs.second(i));
    ev.predictions.push_back(pred.label);
    ev.confusion.accumulate(classifier::label_index(pairs.items()[i].label),
                            classifier::label_index(pred.label));
  }
  ev.report = precision_recall_f1(ev.confusion, aggregation);
  return ev;
}

MetricsReport evaluate_classifier(const classifier::MlpParams& params, const PairDataset& pairs,
                                  Aggregation aggregation) {
  return evaluate_classifier_detailed(params, pairs, aggregation).report;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kFlat: return "flat";
    case Strategy::kIvf: return "ivf";
    case Strategy::kIvfPq: return "ivf_pq";
  }
  return "flat";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "flat") return Strategy::kFlat;
  if (name == "ivf") return Strategy::kIvf;
  if (name == "ivf_pq") return Strategy::kIvfPq;
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy '" + std::string(name) + "'");
}

namespace {

using SearchFn = std::function<SearchResult(std::span<const float>)>;

void run_protocol(const SearchFn& search, MatrixView queries,
                  std::span<const std::uint64_t> originals, RetrievalEvalResult& out) {
  if (queries.rows == 0) throw Error(ErrorCode::kEmptyQuerySet, "no queries");
  if (originals.size() != queries.rows) {
    throw Error(ErrorCode::kShapeMismatch, "one original id is needed per query");
  }
  const std::size_t warm = std::min(kWarmupQueries, queries.rows);
  for (std::size_t i = 0; i < warm; ++i) (void)search(queries.row(i));

  std::size_t successes = 0;
  std::chrono::steady_clock::duration elapsed{};
  for (std::size_t i = 0; i < queries.rows; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult r = search(queries.row(i));
    elapsed += std::chrono::steady_clock::now() - t0;
    for (const auto& h : r.hits) {
      if (h.id == originals[i]) {
        ++successes;
        break;
      }
    }
  }
  out.queries = queries.rows;
  out.successes = successes;
  out.success_rate = static_cast<double>(successes) / static_cast<double>(queries.rows);
  const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
  out.time_ms_per_vector = ms / static_cast<double>(queries.rows);
}

}  // namespace

RetrievalEvalResult evaluate_retrieval(const vecindex::FlatIndex& index, MatrixView queries,
                                       std::span<const std::uint64_t> originals, std::size_t k) {
  if (index.size() == 0) throw Error(ErrorCode::kEmptyIndex, "index is empty");
  RetrievalEvalResult r;
  r.strategy = Strategy::kFlat;
  r.dim = index.dim();
  r.stored_bytes_per_vector = index.dim() * sizeof(float);
  run_protocol([&](std::span<const float> q) { return index.search(q, k); }, queries,
               originals, r);
  return r;
}

RetrievalEvalResult evaluate_retrieval(const vecindex::IvfPqIndex& index, MatrixView queries,
                                       std::span<const std::uint64_t> originals, std::size_t k,
                                       std::size_t nprobe) {
  if (index.count() == 0) throw Error(ErrorCode::kEmptyIndex, "index is empty");
  RetrievalEvalResult r;
  r.strategy = index.has_pq() ? Strategy::kIvfPq : Strategy::kIvf;
  r.dim = index.dim();
  r.stored_bytes_per_vector = index.stored_bytes_per_vector();
  if (index.has_pq()) r.subvector_dim = index.pq()->dsub;
  run_protocol([&](std::span<const float> q) { return index.search(q, k, nprobe); }, queries,
               originals, r);
  return r;
}

nlohmann::ordered_json to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["accuracy"] = report.accuracy;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f1"] = report.f1;
  j["aggregation"] = std::string(aggregation_name(report.aggregation));
  j["total"] = report.total;
  auto per_class = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < report.per_class.size(); ++c) {
    const auto& m = report.per_class[c];
    nlohmann::ordered_json e;
    e["class"] = c;
    if (report.per_class.size() == classifier::kNumLabels) {
      e["label"] = std::string(classifier::label_name(classifier::label_from_index(
          static_cast<std::int64_t>(c))));
    }
    e["precision"] = m.precision;
    e["recall"] = m.recall;
    e["f1"] = m.f1;
    e["support"] = m.support;
    e["precision_undefined"] = m.precision_undefined;
    e["recall_undefined"] = m.recall_undefined;
    per_class.push_back(std::move(e));
  }
  j["per_class"] = std::move(per_class);
  return j;
}

nlohmann::ordered_json to_json(const RetrievalEvalResult& result) {
  nlohmann::ordered_json j;
  j["strategy"] = std::string(strategy_name(result.strategy));
  j["success_rate"] = result.success_rate;
  j["time_ms_per_vector"] = result.time_ms_per_vector;
  j["dim"] = result.dim;
  j["stored_bytes_per_vector"] = result.stored_bytes_per_vector;
  if (result.subvector_dim) {
    j["subvector_dim"] = *result.subvector_dim;
  } else {
    j["subvector_dim"] = nullptr;
  }
  j["queries"] = result.queries;
  j["successes"] = result.successes;
  return j;
}

}  // namespace plagdet::metrics
