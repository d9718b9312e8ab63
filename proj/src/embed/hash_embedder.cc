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
#include <map>
#include <string>

#include "plagdet/common/error.h"
#include "plagdet/common/hashing.h"
#include "plagdet/embed/embedding.h"

namespace plagdet::embed {
namespace {

constexpr double kBigramWeight = 0.5;
constexpr char kBigramJoiner = '\x1f';

void accumulate(std::vector<double>& acc, const std::map<std::string, int>& counts,
                std::uint64_t seed, double weight) {
  const std::size_t dim = acc.size();
  for (const auto& [term, tf] : counts) {
    const std::uint64_t h = hash_string(term, seed);
    const std::size_t bucket = static_cast<std::size_t>(h % dim);
    const double sign = (h >> 63) ? -1.0 : 1.0;
    acc[bucket] += sign * weight * (1.0 + std::log(static_cast<double>(tf)));
  }
}

}  // namespace

EmbeddingVector hash_embed(const TokenSequence& tokens, std::size_t dimension,
                           std::uint64_t seed, bool normalize) {
  if (dimension == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  std::map<std::string, int> unigrams;
  std::map<std::string, int> bigrams;
  for (std::size_t i = 0; i < tokens.tokens.size(); ++i) {
    ++unigrams[tokens.tokens[i]];
    if (i > 0) {
      ++bigrams[tokens.tokens[i - 1] + kBigramJoiner + tokens.tokens[i]];
    }
  }
  std::vector<double> acc(dimension, 0.0);
  accumulate(acc, unigrams, seed, 1.0);
  accumulate(acc, bigrams, seed, kBigramWeight);

  double norm_sq = 0.0;
  for (double v : acc) norm_sq += v * v;

  EmbeddingVector out;
  out.values.resize(dimension);
  const bool scale = normalize && norm_sq > 0.0;
  const double inv = scale ? 1.0 / std::sqrt(norm_sq) : 1.0;
  for (std::size_t i = 0; i < dimension; ++i) {
    out.values[i] = static_cast<float>(acc[i] * inv);
  }
  out.normalized = scale;
  return out;
}

double dot(std::span<const float> a, std::span<const float> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += double(a[i]) * double(b[i]);
  return s;
}

double l2_norm(std::span<const float> v) { return std::sqrt(dot(v, v)); }

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
  const double na = l2_norm(a);
  const double nb = l2_norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (na * nb);
}

bool normalize_in_place(std::vector<float>& v) {
  const double n = l2_norm(v);
  if (n == 0.0) return false;
  for (float& x : v) x = static_cast<float>(double(x) / n);
  return true;
}

}  // namespace plagdet::embed
