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

#ifndef PLAGDET_SERVICE_ENGINE_H_
#define PLAGDET_SERVICE_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "plagdet/classifier/mlp.h"
#include "plagdet/classifier/trainer.h"
#include "plagdet/corpus/types.h"
#include "plagdet/embed/provider.h"
#include "plagdet/service/config.h"
#include "plagdet/service/report.h"
#include "plagdet/vecindex/ivf_index.h"

namespace plagdet::service {

// Segment store, embeddings, index and classifier behind one object.
//
// Readers work on an immutable snapshot, so detect calls run concurrently and
// never wait for a rebuild. Mutations (ingest, train) are built off to the
// side and swapped in; only one may run at a time and a second one fails
// with kConflict.
class Engine {
 public:
  explicit Engine(EngineConfig config);

  const EngineConfig& config() const { return config_; }
  const embed::EmbeddingProvider& provider() const { return *provider_; }

  // Stores the segments (replacing the store unless append is set), embeds
  // them and rebuilds the index with the configured strategy. An empty store
  // leaves no index. Returns the number of stored segments.
  // Throws kConflict, kDuplicateId, kInsufficientVectors.
  std::size_t ingest(std::vector<corpus::Segment> segments, bool append = false);
  std::size_t ingest_file(const std::filesystem::path& corpus_path, bool append = false);

  // Embeds the pairs, trains a fresh classifier and installs it.
  classifier::TrainResult train(std::span<const corpus::TextPair> pairs,
                                std::ostream* log = nullptr);
  // Throws kShapeMismatch if the input size is not twice the embedding size.
  void set_params(classifier::MlpParams params);

  // Embeds the query, retrieves up to k stored segments and classifies each
  // (stored segment, query) pair. Throws kEmptyIndex, kModelMissing.
  DetectionReport detect(std::string_view text, std::optional<std::size_t> k = std::nullopt,
                         std::optional<std::size_t> nprobe = std::nullopt) const;

  std::optional<corpus::Segment> segment(std::uint64_t id) const;
  std::vector<corpus::Segment> segments() const;
  std::size_t segment_count() const;
  bool has_model() const;
  std::optional<classifier::MlpParams> params() const;
  // Serialized index; empty when nothing is indexed.
  std::vector<unsigned char> index_bytes() const;
  bool mutation_in_progress() const;

  // Writes config.toml, segments.jsonl, embeddings.bin, and index.ssix and
  // params.ssmp when present.
  void save(const std::filesystem::path& dir) const;
  static std::unique_ptr<Engine> load(const std::filesystem::path& dir);

 private:
  struct Store {
    std::vector<corpus::Segment> segments;
    std::vector<float> embeddings;  // one row per segment
    std::unordered_map<std::uint64_t, std::size_t> row_of;
    std::optional<vecindex::IvfPqIndex> index;
  };
  struct Snapshot {
    std::shared_ptr<const Store> store;
    std::shared_ptr<const classifier::MlpParams> params;
  };

  Snapshot snapshot() const;
  std::shared_ptr<const Store> build_store(std::vector<corpus::Segment> segments,
                                           std::vector<float> embeddings) const;
  vecindex::IvfBuildParams build_params() const;

  EngineConfig config_;
  std::unique_ptr<embed::EmbeddingProvider> provider_;
  mutable std::shared_mutex state_mu_;
  Snapshot state_;
  mutable std::mutex mutation_mu_;
};

}  // namespace plagdet::service

#endif  // PLAGDET_SERVICE_ENGINE_H_
