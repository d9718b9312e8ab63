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

#ifndef PLAGDET_VECINDEX_IVF_INDEX_H_
#define PLAGDET_VECINDEX_IVF_INDEX_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "plagdet/vecindex/distance.h"
#include "plagdet/vecindex/kmeans.h"
#include "plagdet/vecindex/product_quantizer.h"

namespace plagdet::vecindex {

struct IvfBuildParams {
  std::size_t nlist = 100;
  // Probe width the caller intends to use; search takes nprobe explicitly and
  // this value is not part of the stored index.
  std::size_t nprobe_default = 20;
  std::optional<PqParams> pq;
  Metric metric = Metric::kInnerProduct;
  std::uint64_t seed = 0;
  std::size_t max_iters = 25;
};

class IvfPqIndex;
IvfPqIndex deserialize_index(std::span<const unsigned char> bytes);

// Inverted-file index over a k-means coarse quantizer. Each list stores either
// full vectors or m-byte product-quantization codes of the raw vectors.
class IvfPqIndex {
 public:
  struct InvertedList {
    std::vector<std::uint64_t> ids;
    std::vector<float> vectors;       // ids.size() x dim, when no PQ
    std::vector<std::uint8_t> codes;  // ids.size() x m, with PQ
  };

  // An empty, trained index.
  IvfPqIndex(CoarseQuantizer coarse, std::optional<PqCodebook> pq, Metric metric);

  // Train the coarse quantizer (and the PQ codebooks if requested) on the
  // embeddings, then add them. Throws kInsufficientVectors when there are
  // fewer embeddings than lists, kBadPqShape for an inconsistent PQ shape.
  static IvfPqIndex build(MatrixView embeddings, std::span<const std::uint64_t> ids,
                          const IvfBuildParams& params);

  // Adds vectors to the list of their best centroid. Not safe concurrently
  // with search.
  void add(MatrixView vectors, std::span<const std::uint64_t> ids);

  // Scans the nprobe best lists and returns the top k of the scanned members.
  // With fewer than k scanned members, all of them are returned.
  SearchResult search(std::span<const float> query, std::size_t k, std::size_t nprobe) const;

  // Best nprobe centroids for a query, ties to the smaller index.
  std::vector<std::size_t> probe_order(std::span<const float> query, std::size_t nprobe) const;

  std::size_t count() const { return count_; }
  std::size_t dim() const { return coarse_.dim; }
  std::size_t nlist() const { return coarse_.nlist; }
  Metric metric() const { return metric_; }
  bool has_pq() const { return pq_.has_value(); }
  const CoarseQuantizer& coarse() const { return coarse_; }
  const std::optional<PqCodebook>& pq() const { return pq_; }
  const std::vector<InvertedList>& lists() const { return lists_; }
  bool contains(std::uint64_t id) const { return id_set_.count(id) != 0; }

  // Bytes of payload per stored vector: dim * 4 for full vectors, m with PQ.
  std::size_t stored_bytes_per_vector() const;

 private:
  friend IvfPqIndex deserialize_index(std::span<const unsigned char> bytes);
  void restore_lists(std::vector<InvertedList> lists);

  CoarseQuantizer coarse_;
  std::optional<PqCodebook> pq_;
  Metric metric_;
  std::vector<InvertedList> lists_;
  std::unordered_set<std::uint64_t> id_set_;
  std::size_t count_ = 0;
};

inline IvfPqIndex ivf_build(MatrixView embeddings, std::span<const std::uint64_t> ids,
                            const IvfBuildParams& params) {
  return IvfPqIndex::build(embeddings, ids, params);
}

inline SearchResult ivf_search(const IvfPqIndex& index, std::span<const float> query,
                               std::size_t k, std::size_t nprobe) {
  return index.search(query, k, nprobe);
}

// Binary container, little-endian:
//   "SSIX" | version u32 | metric u8 | dim u32 | nlist u32 | pq flag u8 |
//   [m u32 | dsub u32 | ks u32 | codebooks f32...] | centroids f32... |
//   per list: length u64, then (id u64, payload) | CRC-32 of all prior bytes
inline constexpr std::uint32_t kIndexFormatVersion = 1;

std::vector<unsigned char> serialize_index(const IvfPqIndex& index);
// Throws kCorruptFile for any structural problem.
IvfPqIndex deserialize_index(std::span<const unsigned char> bytes);

void index_save(const IvfPqIndex& index, const std::filesystem::path& path);
IvfPqIndex index_load(const std::filesystem::path& path);

}  // namespace plagdet::vecindex

#endif  // PLAGDET_VECINDEX_IVF_INDEX_H_
