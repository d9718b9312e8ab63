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

#ifndef PLAGDET_VECINDEX_KMEANS_H_
#define PLAGDET_VECINDEX_KMEANS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "plagdet/vecindex/distance.h"

namespace plagdet::vecindex {

// nlist centroids of dimension dim, row-major.
struct CoarseQuantizer {
  std::size_t nlist = 0;
  std::size_t dim = 0;
  std::vector<float> centroids;

  std::span<const float> centroid(std::size_t i) const {
    return std::span<const float>(centroids).subspan(i * dim, dim);
  }
  MatrixView view() const { return MatrixView(centroids, nlist, dim); }
};

struct KMeansOptions {
  std::size_t max_iters = 25;
  // Stop once no centroid moves farther than this (Euclidean).
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
};

struct KMeansResult {
  CoarseQuantizer quantizer;
  // Sum of squared distances after each assignment step.
  std::vector<double> inertia_history;
  std::size_t iterations = 0;
  bool converged = false;
};

// Lloyd's algorithm under squared L2. Seeding is k-means++ over distinct
// points; an empty cluster takes the point of the largest cluster that lies
// farthest from its centroid. Deterministic for a given seed.
// Throws kInsufficientVectors when rows < k.
KMeansResult kmeans_fit(MatrixView vectors, std::size_t k, const KMeansOptions& options);

CoarseQuantizer kmeans_train(MatrixView vectors, std::size_t k, std::size_t max_iters,
                             std::uint64_t seed);

// Index of the nearest centroid under squared L2, ties to the smaller index.
std::size_t nearest_centroid_l2(const CoarseQuantizer& q, std::span<const float> v);

}  // namespace plagdet::vecindex

#endif  // PLAGDET_VECINDEX_KMEANS_H_
