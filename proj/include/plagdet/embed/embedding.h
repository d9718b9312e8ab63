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

#ifndef PLAGDET_EMBED_EMBEDDING_H_
#define PLAGDET_EMBED_EMBEDDING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "plagdet/embed/tokenizer.h"

namespace plagdet::embed {

inline constexpr std::size_t kDefaultDimension = 768;

struct EmbeddingVector {
  std::vector<float> values;
  // Set only when the vector has unit L2 norm (a zero vector never does).
  bool normalized = false;

  std::size_t dimension() const { return values.size(); }
  std::span<const float> view() const { return values; }
  bool operator==(const EmbeddingVector&) const = default;
};

// Feature-hashing encoder. Every distinct token contributes sign * (1 + ln tf)
// to one hashed bucket; every adjacent token pair contributes the same at half
// weight, so word order nudges the vector while shared vocabulary dominates.
// The result is L2-normalized unless normalize is false or it is all zero.
EmbeddingVector hash_embed(const TokenSequence& tokens, std::size_t dimension,
                           std::uint64_t seed, bool normalize = true);

double dot(std::span<const float> a, std::span<const float> b);
double l2_norm(std::span<const float> v);
double cosine_similarity(std::span<const float> a, std::span<const float> b);

// Scales v to unit norm in place. Returns false (and leaves v) if v is zero.
bool normalize_in_place(std::vector<float>& v);

}  // namespace plagdet::embed

#endif  // PLAGDET_EMBED_EMBEDDING_H_
