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

#ifndef PLAGDET_VECINDEX_FLAT_INDEX_H_
#define PLAGDET_VECINDEX_FLAT_INDEX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "plagdet/vecindex/distance.h"

namespace plagdet::vecindex {

// Exhaustive index: every stored vector is scored against the query.
class FlatIndex {
 public:
  FlatIndex(std::size_t dim, Metric metric);

  void add(std::span<const float> vector, std::uint64_t id);
  void add_batch(MatrixView vectors, std::span<const std::uint64_t> ids);

  // Exact top-k. Throws kEmptyIndex, kDimensionMismatch, kInvalidArgument (k == 0).
  SearchResult search(std::span<const float> query, std::size_t k) const;

  std::size_t size() const { return ids_.size(); }
  std::size_t dim() const { return dim_; }
  Metric metric() const { return metric_; }
  MatrixView vectors() const { return MatrixView(data_, ids_.size(), dim_); }
  std::span<const std::uint64_t> ids() const { return ids_; }

 private:
  std::size_t dim_;
  Metric metric_;
  std::vector<float> data_;
  std::vector<std::uint64_t> ids_;
  std::unordered_set<std::uint64_t> id_set_;
};

inline SearchResult flat_search(const FlatIndex& index, std::span<const float> query,
                                std::size_t k) {
  return index.search(query, k);
}

}  // namespace plagdet::vecindex

#endif  // PLAGDET_VECINDEX_FLAT_INDEX_H_
