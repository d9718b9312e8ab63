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

#ifndef PLAGDET_METRICS_EVALUATION_H_
#define PLAGDET_METRICS_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plagdet/classifier/mlp.h"
#include "plagdet/classifier/trainer.h"
#include "plagdet/metrics/confusion.h"
#include "plagdet/vecindex/flat_index.h"
#include "plagdet/vecindex/ivf_index.h"

namespace plagdet::metrics {

struct ClassifierEvaluation {
  ConfusionMatrix confusion{classifier::kNumLabels};
  MetricsReport report;
  std::vector<classifier::PlagiarismLabel> predictions;  // one per pair, dataset order
};

// Predicts every pair and scores the predictions. Throws kEmptyDataset.
ClassifierEvaluation evaluate_classifier_detailed(
    const classifier::MlpParams& params, const classifier::PairDataset& pairs,
    Aggregation aggregation = Aggregation::kWeighted);

MetricsReport evaluate_classifier(const classifier::MlpParams& params,
                                  const classifier::PairDataset& pairs,
                                  Aggregation aggregation = Aggregation::kWeighted);

enum class Strategy { kFlat, kIvf, kIvfPq };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

struct RetrievalEvalResult {
  Strategy strategy = Strategy::kFlat;
  double success_rate = 0.0;
  double time_ms_per_vector = 0.0;
  std::size_t queries = 0;
  std::size_t successes = 0;
  std::size_t dim = 0;
  std::size_t stored_bytes_per_vector = 0;
  std::optional<std::size_t> subvector_dim;  // PQ only
};

inline constexpr std::size_t kWarmupQueries = 10;

// Row i of queries was derived from the stored vector with id originals[i]; a
// query succeeds when that id is among the top-k hits. Up to kWarmupQueries
// untimed queries run first, then every query is timed with a monotonic clock.
// Throws kEmptyIndex, kEmptyQuerySet.
RetrievalEvalResult evaluate_retrieval(const vecindex::FlatIndex& index,
                                       vecindex::MatrixView queries,
                                       std::span<const std::uint64_t> originals,
                                       std::size_t k = 10);
RetrievalEvalResult evaluate_retrieval(const vecindex::IvfPqIndex& index,
                                       vecindex::MatrixView queries,
                                       std::span<const std::uint64_t> originals,
                                       std::size_t k = 10, std::size_t nprobe = 20);

nlohmann::ordered_json to_json(const MetricsReport& report);
nlohmann::ordered_json to_json(const RetrievalEvalResult& result);

}  // namespace plagdet::metrics

#endif  // PLAGDET_METRICS_EVALUATION_H_
