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

#include "plagdet/vecindex/product_quantizer.h"

#include <limits>
#include <string>

#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"
#include "plagdet/vecindex/kmeans.h"

namespace plagdet::vecindex {
namespace {

void check_code(const PqCodebook& cb, std::span<const std::uint8_t> code) {
  if (code.size() != cb.m) {
    throw Error(ErrorCode::kCodeOutOfRange, "code has " + std::to_string(code.size()) +
                                                " entries, expected " + std::to_string(cb.m));
  }
  for (std::uint8_t c : code) {
    if (c >= cb.ks) {
      throw Error(ErrorCode::kCodeOutOfRange,
                  "code entry " + std::to_string(c) + " >= ks " + std::to_string(cb.ks));
    }
  }
}

}  // namespace

PqParams PqParams::from_subvector_dim(std::size_t dim, std::size_t dsub, std::size_t ks) {
  if (dsub == 0 || dim % dsub != 0) {
    throw Error(ErrorCode::kBadPqShape, "subvector dimension " + std::to_string(dsub) +
                                            " does not divide " + std::to_string(dim));
  }
  PqParams p{dim / dsub, dsub, ks};
  p.validate(dim);
  return p;
}

void PqParams::validate(std::size_t dim) const {
  if (m == 0 || dsub == 0 || m * dsub != dim) {
    throw Error(ErrorCode::kBadPqShape, "m x dsub = " + std::to_string(m) + " x " +
                                            std::to_string(dsub) + " != dim " +
                                            std::to_string(dim));
  }
  if (ks == 0 || ks > 256) {
    throw Error(ErrorCode::kBadPqShape, "ks must be in [1, 256], got " + std::to_string(ks));
  }
}

PqCodebook pq_train(MatrixView vectors, std::size_t m, std::size_t ks, std::uint64_t seed,
                    std::size_t max_iters) {
  if (m == 0 || vectors.cols % m != 0) {
    throw Error(ErrorCode::kBadPqShape, std::to_string(m) + " segments do not divide dim " +
                                            std::to_string(vectors.cols));
  }
  PqParams{m, vectors.cols / m, ks}.validate(vectors.cols);
  if (vectors.rows < ks) {
    throw Error(ErrorCode::kInsufficientVectors,
                std::to_string(vectors.rows) + " vectors cannot train " + std::to_string(ks) +
                    " centroids");
  }

  PqCodebook cb;
  cb.m = m;
  cb.dsub = vectors.cols / m;
  cb.ks = ks;
  cb.centroids.resize(m * ks * cb.dsub);

  std::vector<float> sub(vectors.rows * cb.dsub);
  for (std::size_t seg = 0; seg < m; ++seg) {
    for (std::size_t i = 0; i < vectors.rows; ++i) {
      const auto row = vectors.row(i).subspan(seg * cb.dsub, cb.dsub);
      std::copy(row.begin(), row.end(), sub.begin() + i * cb.dsub);
    }
    const CoarseQuantizer q = kmeans_train(MatrixView(sub, vectors.rows, cb.dsub), ks,
                                           max_iters, derive_seed(seed, seg));
    std::copy(q.centroids.begin(), q.centroids.end(),
              cb.centroids.begin() + seg * ks * cb.dsub);
  }
  return cb;
}

void pq_encode_into(const PqCodebook& cb, std::span<const float> vector,
                    std::span<std::uint8_t> code) {
  if (vector.size() != cb.dim() || code.size() != cb.m) {
    throw Error(ErrorCode::kBadPqShape, "vector of dimension " + std::to_string(vector.size()) +
                                            " does not fit codebook of dimension " +
                                            std::to_string(cb.dim()));
  }
  for (std::size_t seg = 0; seg < cb.m; ++seg) {
    const auto part = vector.subspan(seg * cb.dsub, cb.dsub);
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cb.ks; ++c) {
      const double d = l2_squared(part, cb.centroid(seg, c));
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    code[seg] = static_cast<std::uint8_t>(best);
  }
}

std::vector<std::uint8_t> pq_encode(const PqCodebook& cb, std::span<const float> vector) {
  std::vector<std::uint8_t> code(cb.m);
  pq_encode_into(cb, vector, code);
  return code;
}

std::vector<float> pq_decode(const PqCodebook& cb, std::span<const std::uint8_t> code) {
  check_code(cb, code);
  std::vector<float> out;
  out.reserve(cb.dim());
  for (std::size_t seg = 0; seg < cb.m; ++seg) {
    const auto c = cb.centroid(seg, code[seg]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

AdcTable::AdcTable(const PqCodebook& cb, std::span<const float> query, Metric metric)
    : m_(cb.m), ks_(cb.ks), table_(cb.m * cb.ks) {
  if (query.size() != cb.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "query dimension " + std::to_string(query.size()) +
                                                   " != " + std::to_string(cb.dim()));
  }
  for (std::size_t seg = 0; seg < m_; ++seg) {
    const auto part = query.subspan(seg * cb.dsub, cb.dsub);
    for (std::size_t c = 0; c < ks_; ++c) {
      table_[seg * ks_ + c] = metric_score(metric, part, cb.centroid(seg, c));
    }
  }
}

double AdcTable::score(std::span<const std::uint8_t> code) const {
  if (code.size() != m_) {
    throw Error(ErrorCode::kCodeOutOfRange, "code length mismatch");
  }
  for (std::uint8_t c : code) {
    if (c >= ks_) throw Error(ErrorCode::kCodeOutOfRange, "code entry out of range");
  }
  return score_unchecked(code.data());
}

double adc_score(const PqCodebook& codebook, std::span<const float> query,
                 std::span<const std::uint8_t> code, Metric metric) {
  return AdcTable(codebook, query, metric).score(code);
}

}  // namespace plagdet::vecindex
