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

#ifndef PLAGDET_EMBED_PROVIDER_H_
#define PLAGDET_EMBED_PROVIDER_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plagdet/embed/embedding.h"

namespace plagdet::embed {

enum class ProviderKind { kHash, kRemote };

struct EmbeddingProviderConfig {
  ProviderKind kind = ProviderKind::kHash;
  std::size_t dimension = kDefaultDimension;
  bool normalize = true;
  std::optional<std::string> endpoint;  // present iff kind == kRemote
  std::uint64_t seed = 0;
  std::size_t max_tokens = kDefaultMaxTokens;

  // Throws Error(kInvalidArgument) when the invariants do not hold.
  void validate() const;
};

// Text-to-vector encoder. Implementations are immutable after construction
// and safe to call from several threads.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::size_t dimension() const = 0;
  virtual EmbeddingVector embed(std::string_view text) const = 0;
  // One vector per text, in input order.
  virtual std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const;
};

class HashEmbedder final : public EmbeddingProvider {
 public:
  HashEmbedder(std::size_t dimension, std::uint64_t seed, bool normalize = true,
               std::size_t max_tokens = kDefaultMaxTokens);

  std::size_t dimension() const override { return dimension_; }
  EmbeddingVector embed(std::string_view text) const override;

 private:
  std::size_t dimension_;
  std::uint64_t seed_;
  bool normalize_;
  std::size_t max_tokens_;
};

// Client for a sentence-encoder service speaking
//   POST <endpoint> {"texts": [...]} -> {"vectors": [[...], ...]}
class RemoteEmbedder final : public EmbeddingProvider {
 public:
  RemoteEmbedder(std::string endpoint, std::size_t dimension, bool normalize = true,
                 std::size_t batch_size = 64,
                 std::chrono::milliseconds timeout = std::chrono::seconds(30));

  std::size_t dimension() const override { return dimension_; }
  EmbeddingVector embed(std::string_view text) const override;
  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const override;

 private:
  std::string endpoint_;
  std::size_t dimension_;
  bool normalize_;
  std::size_t batch_size_;
  std::chrono::milliseconds timeout_;
};

std::unique_ptr<EmbeddingProvider> make_provider(const EmbeddingProviderConfig& config);

EmbeddingVector embed_text(std::string_view text, const EmbeddingProviderConfig& config);

// Single batched request. Throws kRemoteUnavailable, kDimensionMismatch or
// kPartialResponse. An empty input returns immediately without a request.
std::vector<EmbeddingVector> remote_embed(
    std::span<const std::string> texts, const std::string& endpoint, std::size_t dimension,
    std::chrono::milliseconds timeout = std::chrono::seconds(30));

// Splits "http://host:port/path" into the scheme-host-port part and the path.
struct Endpoint {
  std::string base;
  std::string path;
};
Endpoint parse_endpoint(const std::string& url);

}  // namespace plagdet::embed

#endif  // PLAGDET_EMBED_PROVIDER_H_
