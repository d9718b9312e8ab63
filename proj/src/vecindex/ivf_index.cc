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

#include "plagdet/vecindex/ivf_index.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"

namespace plagdet::vecindex {

IvfPqIndex::IvfPqIndex(CoarseQuantizer coarse, std::optional<PqCodebook> pq, Metric metric)
    : coarse_(std::move(coarse)), pq_(std::move(pq)), metric_(metric), lists_(coarse_.nlist) {
  if (coarse_.nlist == 0 || coarse_.dim == 0 ||
      coarse_.centroids.size() != coarse_.nlist * coarse_.dim) {
    throw Error(ErrorCode::kShapeMismatch, "malformed coarse quantizer");
  }
  if (pq_ && pq_->dim() != coarse_.dim) {
    throw Error(ErrorCode::kBadPqShape, "codebook dimension differs from the index");
  }
}

IvfPqIndex IvfPqIndex::build(MatrixView embeddings, std::span<const std::uint64_t> ids,
                             const IvfBuildParams& params) {
  if (embeddings.rows != ids.size()) {
    throw Error(ErrorCode::kShapeMismatch, "embedding and id counts differ");
  }
  if (params.nlist == 0) throw Error(ErrorCode::kInvalidArgument, "nlist must be at least 1");
  if (params.pq) params.pq->validate(embeddings.cols);
  if (embeddings.rows < params.nlist) {
    throw Error(ErrorCode::kInsufficientVectors,
                std::to_string(embeddings.rows) + " vectors cannot fill " +
                    std::to_string(params.nlist) + " lists");
  }

  CoarseQuantizer coarse = kmeans_train(embeddings, params.nlist, params.max_iters,
                                        derive_seed(params.seed, 1));
  std::optional<PqCodebook> codebook;
  if (params.pq) {
    codebook = pq_train(embeddings, params.pq->m, params.pq->ks, derive_seed(params.seed, 2),
                        params.max_iters);
  }
  IvfPqIndex index(std::move(coarse), std::move(codebook), params.metric);
  index.add(embeddings, ids);
  return index;
}

void IvfPqIndex::add(MatrixView vectors, std::span<const std::uint64_t> ids) {
  if (vectors.rows != ids.size()) {
    throw Error(ErrorCode::kShapeMismatch, "vector and id counts differ");
  }
  if (vectors.rows > 0 && vectors.cols != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector dimension " +
                                                   std::to_string(vectors.cols) + " != " +
                                                   std::to_string(dim()));
  }
  for (float v : vectors.data) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite vector");
  }
  {
    std::unordered_set<std::uint64_t> batch;
    for (std::uint64_t id : ids) {
      if (id_set_.count(id) || !batch.insert(id).second) {
        throw Error(ErrorCode::kDuplicateId, "id " + std::to_string(id) + " already stored");
      }
    }
  }
  std::vector<std::uint8_t> code(pq_ ? pq_->m : 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto v = vectors.row(i);
    InvertedList& list = lists_[probe_order(v, 1).front()];
    list.ids.push_back(ids[i]);
    if (pq_) {
      pq_encode_into(*pq_, v, code);
      list.codes.insert(list.codes.end(), code.begin(), code.end());
    } else {
      list.vectors.insert(list.vectors.end(), v.begin(), v.end());
    }
    id_set_.insert(ids[i]);
    ++count_;
  }
}

std::vector<std::size_t> IvfPqIndex::probe_order(std::span<const float> query,
                                                 std::size_t nprobe) const {
  std::vector<Hit> ranked(coarse_.nlist);
  for (std::size_t c = 0; c < coarse_.nlist; ++c) {
    ranked[c] = Hit{c, metric_score(metric_, query, coarse_.centroid(c))};
  }
  const SearchResult best = select_top_k(std::move(ranked), nprobe, metric_);
  std::vector<std::size_t> order;
  order.reserve(best.hits.size());
  for (const Hit& h : best.hits) order.push_back(static_cast<std::size_t>(h.id));
  return order;
}

SearchResult IvfPqIndex::search(std::span<const float> query, std::size_t k,
                                std::size_t nprobe) const {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (nprobe == 0 || nprobe > nlist()) {
    throw Error(ErrorCode::kInvalidArgument, "nprobe must be in [1, " +
                                                 std::to_string(nlist()) + "]");
  }
  if (count_ == 0) throw Error(ErrorCode::kEmptyIndex, "index is empty");
  if (query.size() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "query dimension " +
                                                   std::to_string(query.size()) + " != " +
                                                   std::to_string(dim()));
  }

  const std::vector<std::size_t> probes = probe_order(query, nprobe);
  std::size_t scanned = 0;
  for (std::size_t c : probes) scanned += lists_[c].ids.size();
  std::vector<Hit> candidates;
  candidates.reserve(scanned);

  if (pq_) {
    const AdcTable table(*pq_, query, metric_);
    for (std::size_t c : probes) {
      const InvertedList& list = lists_[c];
      for (std::size_t i = 0; i < list.ids.size(); ++i) {
        candidates.push_back(
            Hit{list.ids[i], table.score_unchecked(list.codes.data() + i * pq_->m)});
      }
    }
  } else {
    const std::size_t d = dim();
    for (std::size_t c : probes) {
      const InvertedList& list = lists_[c];
      for (std::size_t i = 0; i < list.ids.size(); ++i) {
        const std::span<const float> v(list.vectors.data() + i * d, d);
        candidates.push_back(Hit{list.ids[i], metric_score(metric_, query, v)});
      }
    }
  }
  return select_top_k(std::move(candidates), k, metric_);
}

void IvfPqIndex::restore_lists(std::vector<InvertedList> lists) {
  lists_ = std::move(lists);
  id_set_.clear();
  count_ = 0;
  for (const auto& list : lists_) {
    id_set_.insert(list.ids.begin(), list.ids.end());
    count_ += list.ids.size();
  }
}

std::size_t IvfPqIndex::stored_bytes_per_vector() const {
  return pq_ ? pq_->m : dim() * sizeof(float);
}

}  // namespace plagdet::vecindex
