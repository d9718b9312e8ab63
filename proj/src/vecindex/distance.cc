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

#include "plagdet/vecindex/distance.h"

#include <algorithm>
#include <string>

#include "plagdet/common/error.h"

namespace plagdet::vecindex {

std::string_view metric_name(Metric metric) {
  return metric == Metric::kInnerProduct ? "inner_product" : "l2";
}

Metric parse_metric(std::string_view name) {
  if (name == "inner_product" || name == "ip" || name == "dot") return Metric::kInnerProduct;
  if (name == "l2") return Metric::kL2;
  throw Error(ErrorCode::kInvalidArgument, "unknown metric: " + std::string(name));
}

double inner_product(std::span<const float> a, std::span<const float> b) {
  const std::size_t n = a.size();
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += double(a[i]) * double(b[i]);
    s1 += double(a[i + 1]) * double(b[i + 1]);
    s2 += double(a[i + 2]) * double(b[i + 2]);
    s3 += double(a[i + 3]) * double(b[i + 3]);
  }
  for (; i < n; ++i) s0 += double(a[i]) * double(b[i]);
  return (s0 + s1) + (s2 + s3);
}

double l2_squared(std::span<const float> a, std::span<const float> b) {
  const std::size_t n = a.size();
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const double d0 = double(a[i]) - double(b[i]);
    const double d1 = double(a[i + 1]) - double(b[i + 1]);
    const double d2 = double(a[i + 2]) - double(b[i + 2]);
    const double d3 = double(a[i + 3]) - double(b[i + 3]);
    s0 += d0 * d0;
    s1 += d1 * d1;
    s2 += d2 * d2;
    s3 += d3 * d3;
  }
  for (; i < n; ++i) {
    const double d = double(a[i]) - double(b[i]);
    s0 += d * d;
  }
  return (s0 + s1) + (s2 + s3);
}

double metric_score(Metric metric, std::span<const float> a, std::span<const float> b) {
  return metric == Metric::kInnerProduct ? inner_product(a, b) : l2_squared(a, b);
}

MatrixView::MatrixView(std::span<const float> d, std::size_t r, std::size_t c)
    : data(d), rows(r), cols(c) {
  if (d.size() != r * c) {
    throw Error(ErrorCode::kShapeMismatch, "matrix buffer does not match rows x cols");
  }
}

bool ranks_before(Metric metric, const Hit& a, const Hit& b) {
  if (a.score != b.score) {
    return metric == Metric::kInnerProduct ? a.score > b.score : a.score < b.score;
  }
  return a.id < b.id;
}

SearchResult select_top_k(std::vector<Hit> candidates, std::size_t k, Metric metric) {
  const auto cmp = [metric](const Hit& a, const Hit& b) { return ranks_before(metric, a, b); };
  const std::size_t keep = std::min(k, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + keep, candidates.end(), cmp);
  candidates.resize(keep);
  return SearchResult{std::move(candidates), k};
}

}  // namespace plagdet::vecindex
