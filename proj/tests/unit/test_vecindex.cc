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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "plagdet/common/binary_io.h"
#include "plagdet/vecindex/distance.h"
#include "plagdet/vecindex/flat_index.h"
#include "plagdet/vecindex/ivf_index.h"
#include "plagdet/vecindex/kmeans.h"
#include "plagdet/vecindex/product_quantizer.h"
#include "test_support.h"

namespace plagdet::vecindex {
namespace {

using testing::random_matrix;

std::vector<std::uint64_t> iota_ids(std::size_t n, std::uint64_t start = 0) {
  std::vector<std::uint64_t> ids(n);
  std::iota(ids.begin(), ids.end(), start);
  return ids;
}

void expect_ordered(const SearchResult& r, Metric metric) {
  for (std::size_t i = 1; i < r.hits.size(); ++i) {
    EXPECT_TRUE(ranks_before(metric, r.hits[i - 1], r.hits[i]));
  }
}

// 100 unit-norm centers, points scattered tightly around them.
std::vector<float> clustered(std::size_t n, std::size_t dim, std::uint64_t seed) {
  const std::size_t centers = 100;
  const auto c = random_matrix(centers, dim, seed);
  std::mt19937_64 gen(seed + 1);
  std::normal_distribution<double> nd(0.0, 0.6 / std::sqrt(double(dim)));
  std::vector<float> out(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = i % centers;
    double norm = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      const double v = c[k * dim + d] + nd(gen);
      out[i * dim + d] = float(v);
      norm += v * v;
    }
    for (std::size_t d = 0; d < dim; ++d) out[i * dim + d] = float(out[i * dim + d] / std::sqrt(norm));
  }
  return out;
}

// ---- k-means

TEST(KMeans, TwoDimensionalExample) {
  const std::vector<float> pts{0, 0, 0, 1, 10, 0, 10, 1};
  const auto q = kmeans_train(MatrixView(pts, 4, 2), 2, 25, 1);
  std::vector<std::pair<float, float>> c{{q.centroids[0], q.centroids[1]},
                                         {q.centroids[2], q.centroids[3]}};
  std::sort(c.begin(), c.end());
  EXPECT_FLOAT_EQ(c[0].first, 0.0f);
  EXPECT_FLOAT_EQ(c[0].second, 0.5f);
  EXPECT_FLOAT_EQ(c[1].first, 10.0f);
  EXPECT_FLOAT_EQ(c[1].second, 0.5f);
}

TEST(KMeans, SingleCentroidIsMean) {
  const auto data = random_matrix(50, 6, 3, false);
  const auto q = kmeans_train(MatrixView(data, 50, 6), 1, 25, 0);
  for (std::size_t d = 0; d < 6; ++d) {
    double mean = 0;
    for (std::size_t i = 0; i < 50; ++i) mean += data[i * 6 + d];
    EXPECT_NEAR(q.centroids[d], mean / 50, 1e-5);
  }
}

TEST(KMeans, KEqualsNIsPermutationWithZeroInertia) {
  const auto data = random_matrix(12, 4, 5, false);
  KMeansOptions opt;
  opt.seed = 2;
  const auto r = kmeans_fit(MatrixView(data, 12, 4), 12, opt);
  std::multiset<std::vector<float>> inputs, centroids;
  for (std::size_t i = 0; i < 12; ++i) {
    inputs.insert(std::vector<float>(data.begin() + i * 4, data.begin() + i * 4 + 4));
    const auto c = r.quantizer.centroid(i);
    centroids.insert(std::vector<float>(c.begin(), c.end()));
  }
  EXPECT_EQ(inputs, centroids);
  EXPECT_NEAR(r.inertia_history.back(), 0.0, 1e-12);
}

TEST(KMeans, InertiaNonincreasing) {
  const auto data = clustered(600, 16, 4);
  KMeansOptions opt;
  opt.seed = 9;
  opt.max_iters = 40;
  const auto r = kmeans_fit(MatrixView(data, 600, 16), 20, opt);
  ASSERT_FALSE(r.inertia_history.empty());
  for (std::size_t i = 1; i < r.inertia_history.size(); ++i) {
    EXPECT_LE(r.inertia_history[i], r.inertia_history[i - 1] * (1 + 1e-12));
  }
}

TEST(KMeans, DuplicatePointsStillFinite) {
  std::vector<float> data(20 * 3, 1.0f);
  data[0] = 2.0f;
  const auto q = kmeans_train(MatrixView(data, 20, 3), 4, 10, 0);
  for (float v : q.centroids) EXPECT_TRUE(std::isfinite(v));
}

TEST(KMeans, Errors) {
  const auto data = random_matrix(3, 2, 1);
  EXPECT_ERROR_CODE(kmeans_train(MatrixView(data, 3, 2), 4, 10, 0), ErrorCode::kInsufficientVectors);
  EXPECT_ERROR_CODE(kmeans_train(MatrixView(data, 3, 2), 0, 10, 0), ErrorCode::kInvalidArgument);
}

TEST(KMeans, Deterministic) {
  const auto data = clustered(400, 8, 2);
  const auto a = kmeans_train(MatrixView(data, 400, 8), 10, 25, 77);
  const auto b = kmeans_train(MatrixView(data, 400, 8), 10, 25, 77);
  EXPECT_EQ(a.centroids, b.centroids);
}

// ---- flat

TEST(Flat, SelfQueryFirstWithUnitScore) {
  const auto data = random_matrix(30, 32, 8);
  FlatIndex idx(32, Metric::kInnerProduct);
  idx.add_batch(MatrixView(data, 30, 32), iota_ids(30, 100));
  const auto r = idx.search(std::span<const float>(data).subspan(7 * 32, 32), 3);
  ASSERT_EQ(r.hits.size(), 3u);
  EXPECT_EQ(r.hits[0].id, 107u);
  EXPECT_NEAR(r.hits[0].score, 1.0, 1e-6);
}

TEST(Flat, KBeyondCountReturnsAllSorted) {
  const auto data = random_matrix(10, 8, 2);
  FlatIndex idx(8, Metric::kL2);
  idx.add_batch(MatrixView(data, 10, 8), iota_ids(10));
  const auto r = idx.search(std::span<const float>(data).subspan(0, 8), 50);
  EXPECT_EQ(r.hits.size(), 10u);
  EXPECT_EQ(r.k_requested, 50u);
  expect_ordered(r, Metric::kL2);
}

TEST(Flat, MatchesLinearScanOracle) {
  for (Metric metric : {Metric::kInnerProduct, Metric::kL2}) {
    const std::size_t n = 100, dim = 48;
    const auto data = random_matrix(n, dim, 31);
    const auto queries = random_matrix(10, dim, 32);
    const auto ids = iota_ids(n, 5000);
    FlatIndex idx(dim, metric);
    idx.add_batch(MatrixView(data, n, dim), ids);
    for (std::size_t q = 0; q < 10; ++q) {
      const auto got = idx.search(std::span<const float>(queries).subspan(q * dim, dim), 10);
      const auto want = testing::linear_scan(data, dim, ids, queries.data() + q * dim, 10, metric);
      ASSERT_EQ(got.hits.size(), want.size());
      for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(got.hits[i].id, want[i].id);
        EXPECT_NEAR(got.hits[i].score, double(want[i].score), 1e-9);
      }
    }
  }
}

TEST(Flat, TiesBreakBySmallerId) {
  FlatIndex idx(2, Metric::kInnerProduct);
  const std::vector<float> v{1, 0};
  idx.add(v, 9);
  idx.add(v, 3);
  idx.add(v, 5);
  const auto r = idx.search(v, 3);
  EXPECT_EQ(r.hits[0].id, 3u);
  EXPECT_EQ(r.hits[1].id, 5u);
  EXPECT_EQ(r.hits[2].id, 9u);
}

TEST(Flat, Errors) {
  FlatIndex idx(4, Metric::kInnerProduct);
  const std::vector<float> v{1, 0, 0, 0};
  EXPECT_ERROR_CODE(idx.search(v, 1), ErrorCode::kEmptyIndex);
  idx.add(v, 1);
  EXPECT_ERROR_CODE(idx.add(v, 1), ErrorCode::kDuplicateId);
  EXPECT_ERROR_CODE(idx.search(v, 0), ErrorCode::kInvalidArgument);
  const std::vector<float> short_v{1, 0};
  EXPECT_ERROR_CODE(idx.search(short_v, 1), ErrorCode::kDimensionMismatch);
  EXPECT_ERROR_CODE(idx.add(short_v, 2), ErrorCode::kDimensionMismatch);
}

// ---- IVF

TEST(Ivf, SingleListEqualsFlat) {
  const std::size_t n = 200, dim = 32;
  const auto data = random_matrix(n, dim, 41);
  const auto ids = iota_ids(n);
  FlatIndex flat(dim, Metric::kInnerProduct);
  flat.add_batch(MatrixView(data, n, dim), ids);
  IvfBuildParams p;
  p.nlist = 1;
  const auto ivf = IvfPqIndex::build(MatrixView(data, n, dim), ids, p);
  ASSERT_EQ(ivf.lists().size(), 1u);
  EXPECT_EQ(ivf.lists()[0].ids.size(), n);
  const auto queries = random_matrix(20, dim, 42);
  for (std::size_t q = 0; q < 20; ++q) {
    const std::span<const float> qv(queries.data() + q * dim, dim);
    EXPECT_EQ(ivf.search(qv, 10, 1), flat.search(qv, 10));
  }
}

TEST(Ivf, ExhaustiveProbeEqualsFlat) {
  const std::size_t n = 1000, dim = 64;
  const auto data = clustered(n, dim, 51);
  const auto ids = iota_ids(n, 1);
  for (Metric metric : {Metric::kInnerProduct, Metric::kL2}) {
    FlatIndex flat(dim, metric);
    flat.add_batch(MatrixView(data, n, dim), ids);
    IvfBuildParams p;
    p.nlist = 16;
    p.metric = metric;
    p.seed = 3;
    const auto ivf = IvfPqIndex::build(MatrixView(data, n, dim), ids, p);
    const auto queries = random_matrix(30, dim, 52);
    for (std::size_t q = 0; q < 30; ++q) {
      const std::span<const float> qv(queries.data() + q * dim, dim);
      EXPECT_EQ(ivf.search(qv, 10, 16), flat.search(qv, 10));
    }
  }
}

TEST(Ivf, SelfQueryWithOneProbe) {
  const std::size_t n = 500, dim = 32;
  const auto data = clustered(n, dim, 61);
  IvfBuildParams p;
  p.nlist = 20;
  const auto ivf = IvfPqIndex::build(MatrixView(data, n, dim), iota_ids(n), p);
  for (std::size_t i = 0; i < n; i += 37) {
    const auto r = ivf.search(std::span<const float>(data).subspan(i * dim, dim), 1, 1);
    ASSERT_EQ(r.hits.size(), 1u);
    EXPECT_EQ(r.hits[0].id, i);
  }
}

TEST(Ivf, PartialProbeOverlapsFlat) {
  const std::size_t n = 5000, dim = 768;
  const auto data = clustered(n, dim, 71);
  const auto ids = iota_ids(n);
  FlatIndex flat(dim, Metric::kInnerProduct);
  flat.add_batch(MatrixView(data, n, dim), ids);
  IvfBuildParams p;
  p.nlist = 100;
  p.seed = 1;
  const auto ivf = IvfPqIndex::build(MatrixView(data, n, dim), ids, p);
  double overlap = 0;
  const std::size_t nq = 200;
  for (std::size_t q = 0; q < nq; ++q) {
    const std::span<const float> qv(data.data() + (q * 25) * dim, dim);
    const auto a = ivf.search(qv, 10, 20);
    const auto b = flat.search(qv, 10);
    std::set<std::uint64_t> want;
    for (const auto& h : b.hits) want.insert(h.id);
    std::size_t common = 0;
    for (const auto& h : a.hits) common += want.count(h.id);
    overlap += double(common) / 10.0;
  }
  EXPECT_GE(overlap / nq, 0.95);
}

TEST(Ivf, Errors) {
  const auto data = random_matrix(10, 8, 1);
  IvfBuildParams p;
  p.nlist = 20;
  EXPECT_ERROR_CODE(IvfPqIndex::build(MatrixView(data, 10, 8), iota_ids(10), p),
                    ErrorCode::kInsufficientVectors);
  p.nlist = 2;
  const auto ivf = IvfPqIndex::build(MatrixView(data, 10, 8), iota_ids(10), p);
  const std::span<const float> q(data.data(), 8);
  EXPECT_ERROR_CODE(ivf.search(q, 1, 3), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(ivf.search(q, 1, 0), ErrorCode::kInvalidArgument);
  p.pq = PqParams{3, 3, 4};
  EXPECT_ERROR_CODE(IvfPqIndex::build(MatrixView(data, 10, 8), iota_ids(10), p), ErrorCode::kBadPqShape);
}

TEST(Ivf, BuildIsDeterministic) {
  const auto data = clustered(600, 32, 81);
  IvfBuildParams p;
  p.nlist = 10;
  p.seed = 4;
  p.pq = PqParams::from_subvector_dim(32, 8, 16);
  const auto a = IvfPqIndex::build(MatrixView(data, 600, 32), iota_ids(600), p);
  const auto b = IvfPqIndex::build(MatrixView(data, 600, 32), iota_ids(600), p);
  EXPECT_EQ(serialize_index(a), serialize_index(b));
}

// ---- PQ

TEST(Pq, ShapeFromSubvectorDim) {
  const auto p = PqParams::from_subvector_dim(768, 16);
  EXPECT_EQ(p.m, 48u);
  EXPECT_EQ(p.dsub, 16u);
  EXPECT_ERROR_CODE(PqParams::from_subvector_dim(768, 10), ErrorCode::kBadPqShape);
  EXPECT_ERROR_CODE(PqParams::from_subvector_dim(768, 16, 0), ErrorCode::kBadPqShape);
  EXPECT_ERROR_CODE(PqParams::from_subvector_dim(768, 16, 257), ErrorCode::kBadPqShape);
}

TEST(Pq, SingleCentroidIsSegmentMean) {
  const std::size_t n = 40, dim = 12, m = 3;
  const auto data = random_matrix(n, dim, 91, false);
  const auto cb = pq_train(MatrixView(data, n, dim), m, 1, 0);
  for (std::size_t d = 0; d < dim; ++d) {
    double mean = 0;
    for (std::size_t i = 0; i < n; ++i) mean += data[i * dim + d];
    EXPECT_NEAR(cb.centroids[d], mean / n, 1e-5);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto c : pq_encode(cb, std::span<const float>(data).subspan(i * dim, dim))) EXPECT_EQ(c, 0);
  }
}

TEST(Pq, ExactWhenKsEqualsTrainingSize) {
  const std::size_t n = 8, dim = 16;
  const auto data = random_matrix(n, dim, 92, false);
  const auto cb = pq_train(MatrixView(data, n, dim), 4, n, 5);
  for (std::size_t i = 0; i < n; ++i) {
    const std::span<const float> v(data.data() + i * dim, dim);
    const auto back = pq_decode(cb, pq_encode(cb, v));
    for (std::size_t d = 0; d < dim; ++d) EXPECT_EQ(back[d], v[d]);
  }
}

double mean_reconstruction_error(const PqCodebook& cb, const std::vector<float>& data,
                                 std::size_t n, std::size_t dim) {
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::span<const float> v(data.data() + i * dim, dim);
    total += l2_squared(v, pq_decode(cb, pq_encode(cb, v)));
  }
  return total / n;
}

TEST(Pq, ErrorDecreasesWithKs) {
  const std::size_t n = 300, dim = 32;
  const auto data = random_matrix(n, dim, 93);
  double prev = 1e300;
  for (std::size_t ks : {1, 2, 4}) {
    const auto cb = pq_train(MatrixView(data, n, dim), 4, ks, 6);
    const double err = mean_reconstruction_error(cb, data, n, dim);
    EXPECT_LT(err, prev) << "ks=" << ks;
    prev = err;
  }
}

TEST(Pq, EncodeOfCentroidsIsAllJ) {
  const auto data = random_matrix(64, 16, 94);
  const auto cb = pq_train(MatrixView(data, 64, 16), 4, 8, 1);
  for (std::size_t j = 0; j < 8; ++j) {
    std::vector<std::uint8_t> code(4, std::uint8_t(j));
    const auto v = pq_decode(cb, code);
    EXPECT_EQ(pq_encode(cb, v), code);
  }
}

TEST(Pq, EncodeMatchesArgminOracle) {
  const std::size_t dim = 64, m = 8, ks = 16;
  const auto data = random_matrix(400, dim, 95);
  const auto cb = pq_train(MatrixView(data, 400, dim), m, ks, 2);
  const auto queries = random_matrix(100, dim, 96);
  for (std::size_t q = 0; q < 100; ++q) {
    const float* v = queries.data() + q * dim;
    const auto code = pq_encode(cb, std::span<const float>(v, dim));
    for (std::size_t s = 0; s < m; ++s) {
      std::size_t best = 0;
      long double best_d = -1;
      for (std::size_t j = 0; j < ks; ++j) {
        long double d = 0;
        for (std::size_t t = 0; t < cb.dsub; ++t) {
          const long double diff = (long double)v[s * cb.dsub + t] - cb.centroids[(s * ks + j) * cb.dsub + t];
          d += diff * diff;
        }
        if (best_d < 0 || d < best_d) {
          best_d = d;
          best = j;
        }
      }
      EXPECT_EQ(code[s], best);
    }
  }
}

TEST(Pq, DecodeOfZeroCodeConcatenatesFirstCentroids) {
  const auto data = random_matrix(50, 12, 97);
  const auto cb = pq_train(MatrixView(data, 50, 12), 3, 4, 3);
  const auto v = pq_decode(cb, std::vector<std::uint8_t>(3, 0));
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(v[s * 4 + t], cb.centroid(s, 0)[t]);
  }
}

TEST(Pq, RoundTripErrorMatchesIndependentDecode) {
  const std::size_t dim = 48, m = 6, ks = 8;
  const auto data = random_matrix(100, dim, 98);
  const auto cb = pq_train(MatrixView(data, 100, dim), m, ks, 4);
  for (std::size_t i = 0; i < 100; ++i) {
    const std::span<const float> v(data.data() + i * dim, dim);
    const auto code = pq_encode(cb, v);
    long double want = 0, bound = 0;
    for (std::size_t s = 0; s < m; ++s) {
      long double seg = 0;
      for (std::size_t t = 0; t < cb.dsub; ++t) {
        const long double diff = (long double)v[s * cb.dsub + t] - cb.centroids[(s * ks + code[s]) * cb.dsub + t];
        seg += diff * diff;
      }
      want += seg;
      bound += std::sqrt(seg);
    }
    const double got = l2_squared(v, pq_decode(cb, code));
    EXPECT_NEAR(got, double(want), 1e-9);
    EXPECT_LE(std::sqrt(got), double(bound) + 1e-9);
  }
}

TEST(Pq, AdcEqualsScoreOfDecoded) {
  const std::size_t dim = 64, m = 16, ks = 32;
  const auto data = random_matrix(500, dim, 99);
  const auto cb = pq_train(MatrixView(data, 500, dim), m, ks, 5);
  std::mt19937_64 gen(100);
  const auto queries = random_matrix(1000, dim, 101);
  for (Metric metric : {Metric::kInnerProduct, Metric::kL2}) {
    for (std::size_t q = 0; q < 1000; ++q) {
      std::vector<std::uint8_t> code(m);
      for (auto& c : code) c = std::uint8_t(gen() % ks);
      const std::span<const float> qv(queries.data() + q * dim, dim);
      EXPECT_NEAR(adc_score(cb, qv, code, metric), metric_score(metric, qv, pq_decode(cb, code)), 1e-9);
    }
  }
}

TEST(Pq, AdcDegenerateCases) {
  const auto data = random_matrix(50, 16, 102);
  const auto one = pq_train(MatrixView(data, 50, 16), 4, 1, 0);
  const std::span<const float> q(data.data(), 16);
  const std::vector<std::uint8_t> zero(4, 0);
  const double s = adc_score(one, q, zero, Metric::kInnerProduct);
  EXPECT_EQ(adc_score(one, q, zero, Metric::kInnerProduct), s);

  const auto cb = pq_train(MatrixView(data, 50, 16), 4, 8, 0);
  const std::vector<float> zq(16, 0.0f);
  for (std::uint8_t j = 0; j < 8; ++j) {
    EXPECT_EQ(adc_score(cb, zq, std::vector<std::uint8_t>(4, j), Metric::kInnerProduct), 0.0);
  }
  EXPECT_ERROR_CODE(adc_score(cb, q, std::vector<std::uint8_t>(4, 8), Metric::kInnerProduct),
                    ErrorCode::kCodeOutOfRange);
  EXPECT_ERROR_CODE(adc_score(cb, q, std::vector<std::uint8_t>(3, 0), Metric::kInnerProduct),
                    ErrorCode::kCodeOutOfRange);
}

TEST(Pq, StoredBytesPerVector) {
  const auto data = clustered(600, 768, 103);
  IvfBuildParams p;
  p.nlist = 4;
  p.pq = PqParams::from_subvector_dim(768, 16, 16);
  p.max_iters = 5;
  const auto ivf = IvfPqIndex::build(MatrixView(data, 600, 768), iota_ids(600), p);
  EXPECT_EQ(ivf.stored_bytes_per_vector(), 48u);
  EXPECT_EQ(ivf.pq()->m, 48u);
}

// ---- persistence

class IndexIo : public ::testing::Test {
 protected:
  static IvfPqIndex make(bool pq) {
    const auto data = clustered(800, 32, 111);
    IvfBuildParams p;
    p.nlist = 8;
    p.seed = 2;
    if (pq) p.pq = PqParams::from_subvector_dim(32, 4, 16);
    return IvfPqIndex::build(MatrixView(data, 800, 32), iota_ids(800, 10), p);
  }
  testing::TempDir dir_;
};

TEST_F(IndexIo, RoundTripGivesIdenticalResults) {
  for (bool pq : {false, true}) {
    const auto idx = make(pq);
    index_save(idx, dir_ / "a.ssix");
    const auto back = index_load(dir_ / "a.ssix");
    EXPECT_EQ(serialize_index(back), serialize_index(idx));
    const auto queries = random_matrix(50, 32, 112);
    for (std::size_t q = 0; q < 50; ++q) {
      const std::span<const float> qv(queries.data() + q * 32, 32);
      EXPECT_EQ(back.search(qv, 10, 3), idx.search(qv, 10, 3));
    }
  }
}

TEST_F(IndexIo, TruncatedFileIsCorrupt) {
  const auto bytes = serialize_index(make(true));
  for (std::size_t cut : {std::size_t(0), std::size_t(3), std::size_t(20), bytes.size() / 2, bytes.size() - 1}) {
    const std::vector<unsigned char> part(bytes.begin(), bytes.begin() + cut);
    write_file_bytes(dir_ / "t.ssix", part);
    EXPECT_ERROR_CODE(index_load(dir_ / "t.ssix"), ErrorCode::kCorruptFile);
  }
}

TEST_F(IndexIo, WrongMagicIsCorrupt) {
  auto bytes = serialize_index(make(false));
  bytes[0] = 'X';
  EXPECT_ERROR_CODE(deserialize_index(bytes), ErrorCode::kCorruptFile);
}

TEST_F(IndexIo, FlippedPayloadByteIsCorrupt) {
  auto bytes = serialize_index(make(false));
  bytes[bytes.size() / 2] ^= 0x40;
  EXPECT_ERROR_CODE(deserialize_index(bytes), ErrorCode::kCorruptFile);
}

}  // namespace
}  // namespace plagdet::vecindex
