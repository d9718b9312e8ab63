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

#include "plagdet/vecindex/kmeans.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"

namespace plagdet::vecindex {
namespace {

double dot_d(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

double sq_dist_d(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Training state in double precision; centroids are rounded to float only
// once training finishes.
class Lloyd {
 public:
  Lloyd(MatrixView vectors, std::size_t k)
      : n_(vectors.rows), dim_(vectors.cols), k_(k),
        data_(vectors.data.begin(), vectors.data.end()),
        norms_(n_), centroids_(k * dim_), centroid_norms_(k),
        assign_(n_), dist_(n_) {
    for (std::size_t i = 0; i < n_; ++i) norms_[i] = dot_d(point(i), point(i), dim_);
  }

  const double* point(std::size_t i) const { return data_.data() + i * dim_; }
  double* centroid(std::size_t c) { return centroids_.data() + c * dim_; }

  void seed_plus_plus(Rng& rng) {
    std::vector<double> d2(n_, std::numeric_limits<double>::infinity());
    std::vector<bool> taken(n_, false);
    for (std::size_t c = 0; c < k_; ++c) {
      std::size_t pick;
      double total = 0.0;
      if (c > 0) {
        for (std::size_t i = 0; i < n_; ++i) total += taken[i] ? 0.0 : d2[i];
      }
      if (c == 0 || !(total > 0.0)) {
        // First pick, or every remaining point duplicates a chosen centroid:
        // choose uniformly among the points not taken yet.
        std::size_t remaining = 0;
        for (std::size_t i = 0; i < n_; ++i) remaining += taken[i] ? 0 : 1;
        std::size_t r = static_cast<std::size_t>(rng.below(remaining));
        pick = 0;
        for (std::size_t i = 0; i < n_; ++i) {
          if (taken[i]) continue;
          if (r-- == 0) {
            pick = i;
            break;
          }
        }
      } else {
        double target = rng.uniform() * total;
        pick = n_;
        std::size_t last_positive = n_;
        for (std::size_t i = 0; i < n_; ++i) {
          if (taken[i] || d2[i] <= 0.0) continue;
          last_positive = i;
          target -= d2[i];
          if (target < 0.0) {
            pick = i;
            break;
          }
        }
        if (pick == n_) pick = last_positive;
      }
      taken[pick] = true;
      std::copy_n(point(pick), dim_, centroid(c));
      for (std::size_t i = 0; i < n_; ++i) {
        d2[i] = std::min(d2[i], sq_dist_d(point(i), centroid(c), dim_));
      }
    }
  }

  // Assigns every point to its nearest centroid; returns the inertia.
  double assign() {
    for (std::size_t c = 0; c < k_; ++c) {
      centroid_norms_[c] = dot_d(centroid(c), centroid(c), dim_);
    }
    double inertia = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double* x = point(i);
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k_; ++c) {
        const double d = centroid_norms_[c] - 2.0 * dot_d(x, centroid(c), dim_);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      assign_[i] = best;
      dist_[i] = sq_dist_d(x, centroid(best), dim_);
      inertia += dist_[i];
    }
    return inertia;
  }

  // Moves a point into every empty cluster, then recomputes the means.
  // Returns the largest centroid displacement.
  double update() {
    std::vector<std::size_t> counts(k_, 0);
    for (std::size_t a : assign_) ++counts[a];
    for (std::size_t c = 0; c < k_; ++c) {
      if (counts[c] != 0) continue;
      const std::size_t largest = static_cast<std::size_t>(
          std::max_element(counts.begin(), counts.end()) - counts.begin());
      if (counts[largest] < 2) break;
      std::size_t far = n_;
      for (std::size_t i = 0; i < n_; ++i) {
        if (assign_[i] == largest && (far == n_ || dist_[i] > dist_[far])) far = i;
      }
      assign_[far] = c;
      dist_[far] = 0.0;
      --counts[largest];
      counts[c] = 1;
    }

    std::vector<double> sums(k_ * dim_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double* s = sums.data() + assign_[i] * dim_;
      const double* x = point(i);
      for (std::size_t d = 0; d < dim_; ++d) s[d] += x[d];
    }
    double max_shift = 0.0;
    for (std::size_t c = 0; c < k_; ++c) {
      if (counts[c] == 0) continue;
      double* cen = centroid(c);
      const double inv = 1.0 / static_cast<double>(counts[c]);
      double shift = 0.0;
      for (std::size_t d = 0; d < dim_; ++d) {
        const double nv = sums[c * dim_ + d] * inv;
        shift += (nv - cen[d]) * (nv - cen[d]);
        cen[d] = nv;
      }
      max_shift = std::max(max_shift, std::sqrt(shift));
    }
    return max_shift;
  }

  CoarseQuantizer export_quantizer() const {
    CoarseQuantizer q;
    q.nlist = k_;
    q.dim = dim_;
    q.centroids.resize(centroids_.size());
    for (std::size_t i = 0; i < centroids_.size(); ++i) {
      q.centroids[i] = static_cast<float>(centroids_[i]);
    }
    return q;
  }

 private:
  std::size_t n_, dim_, k_;
  std::vector<double> data_;
  std::vector<double> norms_;
  std::vector<double> centroids_;
  std::vector<double> centroid_norms_;
  std::vector<std::size_t> assign_;
  std::vector<double> dist_;
};

}  // namespace

KMeansResult kmeans_fit(MatrixView vectors, std::size_t k, const KMeansOptions& options) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (options.max_iters == 0) throw Error(ErrorCode::kInvalidArgument, "max_iters must be at least 1");
  if (vectors.rows < k) {
    throw Error(ErrorCode::kInsufficientVectors,
                std::to_string(vectors.rows) + " vectors cannot form " + std::to_string(k) +
                    " clusters");
  }
  for (float v : vectors.data) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite training vector");
  }

  Lloyd lloyd(vectors, k);
  Rng rng(options.seed);
  lloyd.seed_plus_plus(rng);

  KMeansResult result;
  for (std::size_t it = 0; it < options.max_iters; ++it) {
    result.inertia_history.push_back(lloyd.assign());
    const double shift = lloyd.update();
    result.iterations = it + 1;
    if (shift < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.quantizer = lloyd.export_quantizer();
  return result;
}

CoarseQuantizer kmeans_train(MatrixView vectors, std::size_t k, std::size_t max_iters,
                             std::uint64_t seed) {
  KMeansOptions options;
  options.max_iters = max_iters;
  options.seed = seed;
  return kmeans_fit(vectors, k, options).quantizer;
}

std::size_t nearest_centroid_l2(const CoarseQuantizer& q, std::span<const float> v) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < q.nlist; ++c) {
    const double d = l2_squared(v, q.centroid(c));
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

}  // namespace plagdet::vecindex
