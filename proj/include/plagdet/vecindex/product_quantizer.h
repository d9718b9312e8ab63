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

#ifndef PLAGDET_VECINDEX_PRODUCT_QUANTIZER_H_
#define PLAGDET_VECINDEX_PRODUCT_QUANTIZER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "plagdet/vecindex/distance.h"

namespace plagdet::vecindex {

// Shape of a product quantizer: m segments of dsub dimensions, ks centroids
// per segment (at most 256 so a code entry fits in one byte).
struct PqParams {
  std::size_t m = 0;
  std::size_t dsub = 0;
  std::size_t ks = 256;

  // m is derived as dim / dsub. Throws kBadPqShape if dsub does not divide dim.
  static PqParams from_subvector_dim(std::size_t dim, std::size_t dsub, std::size_t ks = 256);
  // Throws kBadPqShape unless m * dsub == dim and 1 <= ks <= 256.
  void validate(std::size_t dim) const;
};

struct PqCodebook {
  std::size_t m = 0;
  std::size_t dsub = 0;
  std::size_t ks = 0;
  // m x ks x dsub, segment-major.
  std::vector<float> centroids;

  std::size_t dim() const { return m * dsub; }
  std::span<const float> centroid(std::size_t segment, std::size_t index) const {
    return std::span<const float>(centroids).subspan((segment * ks + index) * dsub, dsub);
  }
};

// Independent k-means with ks centroids in each of the m subspaces.
PqCodebook pq_train(MatrixView vectors, std::size_t m, std::size_t ks, std::uint64_t seed,
                    std::size_t max_iters = 25);

// Per-segment nearest centroid under L2, ties to the smaller index.
std::vector<std::uint8_t> pq_encode(const PqCodebook& codebook, std::span<const float> vector);
void pq_encode_into(const PqCodebook& codebook, std::span<const float> vector,
                    std::span<std::uint8_t> code);

// Concatenation of the indexed centroids. Throws kCodeOutOfRange.
std::vector<float> pq_decode(const PqCodebook& codebook, std::span<const std::uint8_t> code);

// Per-query lookup table for asymmetric distance computation: entry (s, c)
// holds the partial metric between query segment s and centroid c.
class AdcTable {
 public:
  AdcTable(const PqCodebook& codebook, std::span<const float> query, Metric metric);

  // Sum of table lookups; no bounds checks on the code bytes.
  double score_unchecked(const std::uint8_t* code) const {
    double s = 0.0;
    for (std::size_t seg = 0; seg < m_; ++seg) s += table_[seg * ks_ + code[seg]];
    return s;
  }
  // Throws kCodeOutOfRange on a malformed code.
  double score(std::span<const std::uint8_t> code) const;

 private:
  std::size_t m_;
  std::size_t ks_;
  std::vector<double> table_;
};

double adc_score(const PqCodebook& codebook, std::span<const float> query,
                 std::span<const std::uint8_t> code, Metric metric);

}  // namespace plagdet::vecindex

#endif  // PLAGDET_VECINDEX_PRODUCT_QUANTIZER_H_
