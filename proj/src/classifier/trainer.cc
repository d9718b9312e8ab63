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

#include "plagdet/classifier/trainer.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>

#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"

namespace plagdet::classifier {

std::uint32_t PairDataset::add_vector(std::span<const float> v) {
  if (v.size() != dim_) {
    throw Error(ErrorCode::kShapeMismatch, "vector dimension " + std::to_string(v.size()) +
                                               " != " + std::to_string(dim_));
  }
  const auto row = static_cast<std::uint32_t>(vectors_.size() / dim_);
  vectors_.insert(vectors_.end(), v.begin(), v.end());
  return row;
}

void PairDataset::add_item(std::uint32_t first, std::uint32_t second, PlagiarismLabel label) {
  const std::size_t rows = vectors_.size() / dim_;
  if (first >= rows || second >= rows) {
    throw Error(ErrorCode::kInvalidArgument, "pair references a missing vector");
  }
  label_from_index(static_cast<std::int64_t>(label));
  items_.push_back(Item{first, second, label});
}

void PairDataset::add_pair(std::span<const float> h1, std::span<const float> h2,
                           PlagiarismLabel label) {
  const std::uint32_t a = add_vector(h1);
  const std::uint32_t b = add_vector(h2);
  add_item(a, b, label);
}

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) throw Error(ErrorCode::kInvalidArgument, "learning_rate must be > 0");
  if (batch_size == 0) throw Error(ErrorCode::kInvalidArgument, "batch_size must be >= 1");
  if (max_epochs == 0) throw Error(ErrorCode::kInvalidArgument, "max_epochs must be >= 1");
  if (hidden_dim == 0) throw Error(ErrorCode::kInvalidArgument, "hidden_dim must be >= 1");
}

TrainResult train_from(MlpParams params, const PairDataset& data, const TrainConfig& config,
                       std::ostream* log) {
  config.validate();
  if (data.empty()) throw Error(ErrorCode::kEmptyDataset, "training set is empty");
  if (params.input_dim != 2 * data.dim() || params.num_classes != kNumLabels) {
    throw Error(ErrorCode::kShapeMismatch, "parameters do not match the dataset");
  }

  const std::size_t n = data.size();
  const AdamConfig adam = config.adam();
  AdamState state;
  MlpParams grads = MlpParams::zeros(params.input_dim, params.hidden_dim, params.num_classes);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  TrainResult result;
  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    Rng rng(derive_seed(config.seed, 1000 + epoch));
    rng.shuffle(std::span<std::size_t>(order));

    double loss_sum = 0.0;
    std::size_t correct = 0;
    for (std::size_t start = 0; start < n; start += config.batch_size) {
      const std::size_t end = std::min(n, start + config.batch_size);
      const double scale = 1.0 / static_cast<double>(end - start);
      grads.set_zero();
      for (std::size_t b = start; b < end; ++b) {
        const std::size_t i = order[b];
        const std::size_t label = label_index(data.items()[i].label);
        const ForwardCache cache = forward(params, data.first(i), data.second(i));
        loss_sum += cross_entropy(cache.probs, label);
        if (argmax(cache.probs) == label) ++correct;
        accumulate_gradients(params, cache, label, scale, grads);
      }
      adam_step(params, grads, state, adam);
    }

    EpochStats stats{epoch, loss_sum / static_cast<double>(n),
                     static_cast<double>(correct) / static_cast<double>(n)};
    result.history.push_back(stats);
    if (log) {
      char line[128];
      std::snprintf(line, sizeof(line), "epoch %zu loss %.6f accuracy %.4f\n", stats.epoch,
                    stats.mean_loss, stats.accuracy);
      *log << line;
    }
  }
  params.round_to_float();
  result.params = std::move(params);
  return result;
}

TrainResult train(const PairDataset& data, const TrainConfig& config, std::ostream* log) {
  config.validate();
  if (data.empty()) throw Error(ErrorCode::kEmptyDataset, "training set is empty");
  MlpParams init = MlpParams::glorot(2 * data.dim(), config.hidden_dim, kNumLabels,
                                     derive_seed(config.seed, 7));
  return train_from(std::move(init), data, config, log);
}

}  // namespace plagdet::classifier
