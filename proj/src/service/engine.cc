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

#include "plagdet/service/engine.h"

#include <chrono>
#include <fstream>

#include "plagdet/classifier/params_io.h"
#include "plagdet/common/binary_io.h"
#include "plagdet/common/error.h"
#include "plagdet/corpus/generators.h"
#include "plagdet/corpus/jsonl.h"
#include "plagdet/embed/tokenizer.h"

namespace plagdet::service {
namespace {

constexpr std::string_view kEmbeddingsMagic = "SSEV";
constexpr std::uint32_t kEmbeddingsVersion = 1;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

class MutationGuard {
 public:
  explicit MutationGuard(std::mutex& mu) : lock_(mu, std::try_to_lock) {
    if (!lock_.owns_lock()) {
      throw Error(ErrorCode::kConflict, "another ingest or training job is running");
    }
  }

 private:
  std::unique_lock<std::mutex> lock_;
};

}  // namespace

Engine::Engine(EngineConfig config) : config_(std::move(config)) {
  config_.validate();
  provider_ = embed::make_provider(config_.provider);
  state_.store = std::make_shared<Store>();
}

Engine::Snapshot Engine::snapshot() const {
  std::shared_lock lock(state_mu_);
  return state_;
}

vecindex::IvfBuildParams Engine::build_params() const {
  return index_build_params(config_, provider_->dimension());
}

std::shared_ptr<const Engine::Store> Engine::build_store(std::vector<corpus::Segment> segments,
                                                         std::vector<float> embeddings) const {
  auto store = std::make_shared<Store>();
  const std::size_t dim = provider_->dimension();
  if (embeddings.size() != segments.size() * dim) {
    throw Error(ErrorCode::kShapeMismatch, "one embedding is needed per segment");
  }
  std::vector<std::uint64_t> ids;
  ids.reserve(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].text.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "segment " + std::to_string(segments[i].id) + " has empty text");
    }
    if (!store->row_of.emplace(segments[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "segment id " + std::to_string(segments[i].id) + " appears twice");
    }
    ids.push_back(segments[i].id);
  }
  if (!segments.empty()) {
    store->index = vecindex::IvfPqIndex::build(
        vecindex::MatrixView(embeddings, segments.size(), dim), ids, build_params());
  }
  store->segments = std::move(segments);
  store->embeddings = std::move(embeddings);
  return store;
}

std::size_t Engine::ingest(std::vector<corpus::Segment> segments, bool append) {
  MutationGuard guard(mutation_mu_);
  for (auto& s : segments) s.token_count = embed::count_tokens(s.text);

  std::vector<std::string> texts;
  texts.reserve(segments.size());
  for (const auto& s : segments) texts.push_back(s.text);
  const auto vectors = provider_->embed_batch(texts);

  std::vector<corpus::Segment> all;
  std::vector<float> rows;
  if (append) {
    const auto current = snapshot().store;
    all = current->segments;
    rows = current->embeddings;
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    rows.insert(rows.end(), vectors[i].values.begin(), vectors[i].values.end());
    all.push_back(std::move(segments[i]));
  }
  auto store = build_store(std::move(all), std::move(rows));
  const std::size_t n = store->segments.size();
  std::unique_lock lock(state_mu_);
  state_.store = std::move(store);
  return n;
}

std::size_t Engine::ingest_file(const std::filesystem::path& corpus_path, bool append) {
  return ingest(corpus::read_corpus(corpus_path), append);
}

classifier::TrainResult Engine::train(std::span<const corpus::TextPair> pairs,
                                      std::ostream* log) {
  MutationGuard guard(mutation_mu_);
  const classifier::PairDataset ds = corpus::embed_pairs(pairs, *provider_);
  classifier::TrainResult result = classifier::train(ds, config_.classifier, log);
  auto params = std::make_shared<const classifier::MlpParams>(result.params);
  std::unique_lock lock(state_mu_);
  state_.params = std::move(params);
  return result;
}

void Engine::set_params(classifier::MlpParams params) {
  if (params.input_dim != 2 * provider_->dimension() ||
      params.num_classes != classifier::kNumLabels) {
    throw Error(ErrorCode::kShapeMismatch,
                "classifier expects inputs of size " + std::to_string(params.input_dim) +
                    ", engine embeddings give " + std::to_string(2 * provider_->dimension()));
  }
  MutationGuard guard(mutation_mu_);
  auto p = std::make_shared<const classifier::MlpParams>(std::move(params));
  std::unique_lock lock(state_mu_);
  state_.params = std::move(p);
}

DetectionReport Engine::detect(std::string_view text, std::optional<std::size_t> k,
                               std::optional<std::size_t> nprobe) const {
  const Snapshot snap = snapshot();
  if (!snap.store->index) throw Error(ErrorCode::kEmptyIndex, "no segments have been ingested");
  if (!snap.params) throw Error(ErrorCode::kModelMissing, "no classifier has been trained or loaded");
  const auto& index = *snap.store->index;

  DetectionReport r;
  r.query_text = std::string(text);
  r.k = k.value_or(config_.k);
  r.nprobe = config_.index.strategy == metrics::Strategy::kFlat
                 ? index.nlist()
                 : nprobe.value_or(std::min(config_.index.nprobe, index.nlist()));
  r.strategy = std::string(metrics::strategy_name(config_.index.strategy));
  if (r.k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");

  auto t0 = std::chrono::steady_clock::now();
  const embed::EmbeddingVector q = provider_->embed(text);
  r.timings.embed_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  const vecindex::SearchResult hits = index.search(q.values, r.k, r.nprobe);
  r.timings.retrieve_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  const std::size_t dim = provider_->dimension();
  for (std::size_t i = 0; i < hits.hits.size(); ++i) {
    const auto& hit = hits.hits[i];
    const std::size_t row = snap.store->row_of.at(hit.id);
    const corpus::Segment& seg = snap.store->segments[row];
    const std::span<const float> stored =
        std::span<const float>(snap.store->embeddings).subspan(row * dim, dim);
    const classifier::Prediction p = classifier::predict(*snap.params, stored, q.values);
    Candidate c;
    c.rank = i + 1;
    c.segment_id = seg.id;
    c.doc_id = seg.doc_id;
    c.text = seg.text;
    c.score = hit.score;
    c.label = p.label;
    for (std::size_t l = 0; l < classifier::kNumLabels; ++l) c.probabilities[l] = p.probabilities[l];
    r.candidates.push_back(std::move(c));
  }
  r.timings.classify_ms = ms_since(t0);
  return r;
}

std::optional<corpus::Segment> Engine::segment(std::uint64_t id) const {
  const auto store = snapshot().store;
  const auto it = store->row_of.find(id);
  if (it == store->row_of.end()) return std::nullopt;
  return store->segments[it->second];
}

std::vector<corpus::Segment> Engine::segments() const { return snapshot().store->segments; }

std::size_t Engine::segment_count() const { return snapshot().store->segments.size(); }

bool Engine::has_model() const { return snapshot().params != nullptr; }

std::optional<classifier::MlpParams> Engine::params() const {
  const auto p = snapshot().params;
  if (!p) return std::nullopt;
  return *p;
}

std::vector<unsigned char> Engine::index_bytes() const {
  const auto store = snapshot().store;
  if (!store->index) return {};
  return vecindex::serialize_index(*store->index);
}

bool Engine::mutation_in_progress() const {
  std::unique_lock<std::mutex> lock(mutation_mu_, std::try_to_lock);
  return !lock.owns_lock();
}

void Engine::save(const std::filesystem::path& dir) const {
  const Snapshot snap = snapshot();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + dir.string() + ": " + ec.message());

  {
    std::ofstream out(dir / "config.toml", std::ios::binary | std::ios::trunc);
    out << format_config(config_);
    if (!out) throw Error(ErrorCode::kIoFailure, "cannot write config.toml");
  }
  corpus::write_corpus(dir / "segments.jsonl", snap.store->segments);

  BinaryWriter w;
  w.magic(kEmbeddingsMagic);
  w.u32(kEmbeddingsVersion);
  w.u32(static_cast<std::uint32_t>(provider_->dimension()));
  w.u64(snap.store->segments.size());
  for (const auto& s : snap.store->segments) w.u64(s.id);
  w.f32_array(snap.store->embeddings);
  w.seal();
  write_file_bytes(dir / "embeddings.bin", w.buffer());

  std::filesystem::remove(dir / "index.ssix", ec);
  std::filesystem::remove(dir / "params.ssmp", ec);
  if (snap.store->index) vecindex::index_save(*snap.store->index, dir / "index.ssix");
  if (snap.params) classifier::params_save(*snap.params, dir / "params.ssmp");
}

std::unique_ptr<Engine> Engine::load(const std::filesystem::path& dir) {
  auto engine = std::make_unique<Engine>(load_config(dir / "config.toml"));
  const std::size_t dim = engine->provider_->dimension();
  auto store = std::make_shared<Store>();
  store->segments = corpus::read_corpus(dir / "segments.jsonl");

  const auto bytes = read_file_bytes(dir / "embeddings.bin");
  BinaryReader r = BinaryReader::open_sealed(bytes);
  r.expect_magic(kEmbeddingsMagic);
  if (r.u32() != kEmbeddingsVersion) throw Error(ErrorCode::kCorruptFile, "embeddings version");
  if (r.u32() != dim) throw Error(ErrorCode::kCorruptFile, "embedding dimension differs from config");
  const std::uint64_t n = r.u64();
  if (n != store->segments.size()) throw Error(ErrorCode::kCorruptFile, "embedding count differs");
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t id = r.u64();
    if (id != store->segments[i].id) throw Error(ErrorCode::kCorruptFile, "embedding ids differ");
    store->row_of.emplace(id, i);
  }
  if (r.remaining() != n * dim * sizeof(float)) {
    throw Error(ErrorCode::kCorruptFile, "embedding payload size");
  }
  store->embeddings.resize(n * dim);
  r.f32_array(store->embeddings);

  if (std::filesystem::exists(dir / "index.ssix")) {
    store->index = vecindex::index_load(dir / "index.ssix");
    if (store->index->count() != n || store->index->dim() != dim) {
      throw Error(ErrorCode::kCorruptFile, "index does not match the segment store");
    }
    for (const auto& s : store->segments) {
      if (!store->index->contains(s.id)) throw Error(ErrorCode::kCorruptFile, "index is missing a segment");
    }
  } else if (n > 0) {
    throw Error(ErrorCode::kCorruptFile, "index.ssix is missing");
  }
  engine->state_.store = std::move(store);
  if (std::filesystem::exists(dir / "params.ssmp")) {
    engine->set_params(classifier::params_load(dir / "params.ssmp"));
  }
  return engine;
}

}  // namespace plagdet::service
