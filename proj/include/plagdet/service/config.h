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

#ifndef PLAGDET_SERVICE_CONFIG_H_
#define PLAGDET_SERVICE_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "plagdet/classifier/trainer.h"
#include "plagdet/corpus/generators.h"
#include "plagdet/corpus/paraphraser.h"
#include "plagdet/embed/provider.h"
#include "plagdet/metrics/evaluation.h"
#include "plagdet/vecindex/distance.h"
#include "plagdet/vecindex/ivf_index.h"

namespace plagdet::service {

struct IndexSettings {
  metrics::Strategy strategy = metrics::Strategy::kIvf;
  std::size_t nlist = 100;
  std::size_t nprobe = 20;
  std::size_t dsub = 16;
  std::size_t ks = 256;
  vecindex::Metric metric = vecindex::Metric::kInnerProduct;
  std::size_t max_iters = 25;
};

struct DatasetSettings {
  corpus::PairCounts counts;
  double split_ratio = 0.8;
  corpus::ParaphraseKind paraphrase = corpus::ParaphraseKind::kRuleStub;
  std::optional<std::string> paraphrase_endpoint;
};

// Every tunable of the engine. All random streams derive from seed.
struct EngineConfig {
  embed::EmbeddingProviderConfig provider;
  IndexSettings index;
  classifier::TrainConfig classifier;
  DatasetSettings dataset;
  std::size_t k = 10;
  std::uint64_t seed = 0;

  // Throws kInvalidArgument.
  void validate() const;
  // Sets the engine seed together with the provider and classifier seeds.
  void set_seed(std::uint64_t s);

  std::uint64_t index_seed() const;
  std::uint64_t classifier_seed() const;
  std::uint64_t dataset_seed() const;
  corpus::ParaphraseProviderConfig paraphrase_config() const;
};

// key = value lines grouped under [section] headers; '#' starts a comment.
// Strings may be quoted. Unknown sections or keys throw kInvalidArgument.
//
//   seed = 7
//   [provider]  kind, dimension, normalize, endpoint, seed, max_tokens
//   [index]     strategy (flat|ivf|ivf_pq), nlist, nprobe, dsub, ks,
//               metric (inner_product|l2), max_iters
//   [classifier] hidden, learning_rate, batch_size, max_epochs,
//               adam_beta1, adam_beta2, adam_eps
//   [dataset]   shuffle, imitation, negative, rewritten_negative,
//               split_ratio, paraphrase (rule_stub|external), paraphrase_endpoint
//   [detect]    k
//
// provider.seed and classifier.seed default to the top-level seed.
// Index build parameters for the configured strategy. Flat is an IVF index
// with a single list, so every query scans everything.
vecindex::IvfBuildParams index_build_params(const EngineConfig& config, std::size_t dim);

EngineConfig parse_config(std::string_view text);
EngineConfig load_config(const std::filesystem::path& path);
std::string format_config(const EngineConfig& config);
nlohmann::ordered_json config_to_json(const EngineConfig& config);

}  // namespace plagdet::service

#endif  // PLAGDET_SERVICE_CONFIG_H_
