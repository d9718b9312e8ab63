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

#include "plagdet/embed/provider.h"

#include "plagdet/common/error.h"

namespace plagdet::embed {

void EmbeddingProviderConfig::validate() const {
  if (dimension == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  if (max_tokens == 0) throw Error(ErrorCode::kInvalidArgument, "max_tokens must be positive");
  const bool has_endpoint = endpoint.has_value() && !endpoint->empty();
  if ((kind == ProviderKind::kRemote) != has_endpoint) {
    throw Error(ErrorCode::kInvalidArgument,
                "an endpoint is required for the remote provider and only for it");
  }
}

std::vector<EmbeddingVector> EmbeddingProvider::embed_batch(
    std::span<const std::string> texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(embed(t));
  return out;
}

HashEmbedder::HashEmbedder(std::size_t dimension, std::uint64_t seed, bool normalize,
                           std::size_t max_tokens)
    : dimension_(dimension), seed_(seed), normalize_(normalize), max_tokens_(max_tokens) {
  if (dimension_ == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
}

EmbeddingVector HashEmbedder::embed(std::string_view text) const {
  return hash_embed(tokenize(text, max_tokens_), dimension_, seed_, normalize_);
}

std::unique_ptr<EmbeddingProvider> make_provider(const EmbeddingProviderConfig& config) {
  config.validate();
  if (config.kind == ProviderKind::kRemote) {
    return std::make_unique<RemoteEmbedder>(*config.endpoint, config.dimension,
                                            config.normalize);
  }
  return std::make_unique<HashEmbedder>(config.dimension, config.seed, config.normalize,
                                        config.max_tokens);
}

EmbeddingVector embed_text(std::string_view text, const EmbeddingProviderConfig& config) {
  return make_provider(config)->embed(text);
}

}  // namespace plagdet::embed
