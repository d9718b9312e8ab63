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

#ifndef PLAGDET_CLASSIFIER_TRAINER_H_
#define PLAGDET_CLASSIFIER_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "plagdet/classifier/adam.h"
#include "plagdet/classifier/mlp.h"

namespace plagdet::classifier {

// Embedded (original, suspect, label) triples. Vectors are stored once and
// referenced by row so a text shared by several pairs is not duplicated.
class PairDataset {
 public:
  struct Item {
    std::uint32_t first = 0;   // row of h1 (original)
    std::uint32_t second = 0;  // row of h2 (suspect)
    PlagiarismLabel label = PlagiarismLabel::kNoPlagiarism;
  };

  explicit PairDataset(std::size_t dim) : dim_(dim) {}

  std::uint32_t add_vector(std::span<const float> v);
  void add_item(std::uint32_t first, std::uint32_t second, PlagiarismLabel label);
  // Appends both vectors and the pair.
  void add_pair(std::span<const float> h1, std::span<const float> h2, PlagiarismLabel label);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Item>& items() const { return items_; }
  std::span<const float> vector(std::uint32_t row) const {
    return std::span<const float>(vectors_).subspan(std::size_t(row) * dim_, dim_);
  }
  std::span<const float> first(std::size_t i) const { return vector(items_[i].first); }
  std::span<const float> second(std::size_t i) const { return vector(items_[i].second); }

 private:
  std::size_t dim_;
  std::vector<float> vectors_;
  std::vector<Item> items_;
};

struct TrainConfig {
  double learning_rate = 0.001;
  std::size_t batch_size = 1024;
  std::size_t max_epochs = 20;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  std::size_t hidden_dim = kDefaultHidden;
  std::uint64_t seed = 0;

  void validate() const;
  AdamConfig adam() const { return {learning_rate, adam_beta1, adam_beta2, adam_eps}; }
};

struct EpochStats {
  std::size_t epoch = 0;
  double mean_loss = 0.0;
  double accuracy = 0.0;

  bool operator==(const EpochStats&) const = default;
};

struct TrainResult {
  MlpParams params;
  std::vector<EpochStats> history;
};

// Mini-batch Adam on the mean cross-entropy of each batch. The sample order is
// reshuffled every epoch from the seed; the last batch of an epoch may be
// short. Loss and accuracy in the history are measured on each batch before
// its update. Final parameters are rounded to float precision. If log is set,
// one line per epoch is written: "epoch <n> loss <mean> accuracy <acc>".
// Throws kEmptyDataset.
TrainResult train(const PairDataset& data, const TrainConfig& config,
                  std::ostream* log = nullptr);

// Same loop starting from the given parameters.
TrainResult train_from(MlpParams init, const PairDataset& data, const TrainConfig& config,
                       std::ostream* log = nullptr);

}  // namespace plagdet::classifier

#endif  // PLAGDET_CLASSIFIER_TRAINER_H_
