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

#include <cmath>

#include <httplib.h>
#include <json.hpp>

#include "plagdet/common/error.h"
#include "plagdet/embed/provider.h"

namespace plagdet::embed {

using json = nlohmann::json;

Endpoint parse_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos || url.compare(0, scheme_end, "http") != 0) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint must be an http:// URL: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::vector<EmbeddingVector> remote_embed(std::span<const std::string> texts,
                                          const std::string& endpoint, std::size_t dimension,
                                          std::chrono::milliseconds timeout) {
  if (texts.empty()) return {};
  const Endpoint ep = parse_endpoint(endpoint);

  httplib::Client client(ep.base);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  const json request = {{"texts", std::vector<std::string>(texts.begin(), texts.end())}};
  auto res = client.Post(ep.path, request.dump(), "application/json");
  if (!res) {
    throw Error(ErrorCode::kRemoteUnavailable,
                endpoint + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kRemoteUnavailable,
                endpoint + " returned HTTP " + std::to_string(res->status));
  }

  json body;
  try {
    body = json::parse(res->body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kRemoteUnavailable, std::string("malformed response: ") + e.what());
  }
  if (!body.is_object() || !body.contains("vectors") || !body["vectors"].is_array()) {
    throw Error(ErrorCode::kRemoteUnavailable, "response lacks a \"vectors\" array");
  }
  const auto& vectors = body["vectors"];
  if (vectors.size() != texts.size()) {
    throw Error(ErrorCode::kPartialResponse,
                "expected " + std::to_string(texts.size()) + " vectors, got " +
                    std::to_string(vectors.size()));
  }

  std::vector<EmbeddingVector> out;
  out.reserve(vectors.size());
  for (const auto& row : vectors) {
    if (!row.is_array() || row.size() != dimension) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "expected dimension " + std::to_string(dimension) + ", got " +
                      std::to_string(row.is_array() ? row.size() : 0));
    }
    EmbeddingVector v;
    v.values.reserve(dimension);
    for (const auto& x : row) {
      if (!x.is_number() || !std::isfinite(x.get<double>())) {
        throw Error(ErrorCode::kRemoteUnavailable, "non-finite vector component");
      }
      v.values.push_back(x.get<float>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

RemoteEmbedder::RemoteEmbedder(std::string endpoint, std::size_t dimension, bool normalize,
                               std::size_t batch_size, std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)),
      dimension_(dimension),
      normalize_(normalize),
      batch_size_(batch_size == 0 ? 1 : batch_size),
      timeout_(timeout) {
  parse_endpoint(endpoint_);
  if (dimension_ == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
}

EmbeddingVector RemoteEmbedder::embed(std::string_view text) const {
  const std::string owned(text);
  return embed_batch(std::span<const std::string>(&owned, 1)).front();
}

std::vector<EmbeddingVector> RemoteEmbedder::embed_batch(
    std::span<const std::string> texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (std::size_t start = 0; start < texts.size(); start += batch_size_) {
    const auto chunk = texts.subspan(start, std::min(batch_size_, texts.size() - start));
    for (auto& v : remote_embed(chunk, endpoint_, dimension_, timeout_)) {
      if (normalize_) v.normalized = normalize_in_place(v.values);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace plagdet::embed
