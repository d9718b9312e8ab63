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

#include "plagdet/vecindex/flat_index.h"

#include <cmath>
#include <string>

#include "plagdet/common/error.h"

namespace plagdet::vecindex {

FlatIndex::FlatIndex(std::size_t dim, Metric metric) : dim_(dim), metric_(metric) {
  if (dim_ == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
}

void FlatIndex::add(std::span<const float> vector, std::uint64_t id) {
  if (vector.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector dimension " +
                                                   std::to_string(vector.size()) + " != " +
                                                   std::to_string(dim_));
  }
  for (float v : vector) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite vector");
  }
  if (!id_set_.insert(id).second) {
    throw Error(ErrorCode::kDuplicateId, "id " + std::to_string(id) + " already stored");
  }
  data_.insert(data_.end(), vector.begin(), vector.end());
  ids_.push_back(id);
}

void FlatIndex::add_batch(MatrixView vectors, std::span<const std::uint64_t> ids) {
  if (vectors.rows != ids.size()) {
    throw Error(ErrorCode::kShapeMismatch, "vector and id counts differ");
  }
  for (std::size_t i = 0; i < ids.size(); ++i) add(vectors.row(i), ids[i]);
}

SearchResult FlatIndex::search(std::span<const float> query, std::size_t k) const {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (ids_.empty()) throw Error(ErrorCode::kEmptyIndex, "flat index is empty");
  if (query.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "query dimension " +
                                                   std::to_string(query.size()) + " != " +
                                                   std::to_string(dim_));
  }
  const MatrixView all = vectors();
  std::vector<Hit> candidates(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    candidates[i] = Hit{ids_[i], metric_score(metric_, query, all.row(i))};
  }
  return select_top_k(std::move(candidates), k, metric_);
}

}  // namespace plagdet::vecindex
