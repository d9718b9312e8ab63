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

#ifndef PLAGDET_VECINDEX_DISTANCE_H_
#define PLAGDET_VECINDEX_DISTANCE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace plagdet::vecindex {

// Inner product ranks higher scores first; L2 (squared distance) ranks lower
// scores first.
enum class Metric : std::uint8_t { kInnerProduct = 0, kL2 = 1 };

std::string_view metric_name(Metric metric);
Metric parse_metric(std::string_view name);

// Both kernels accumulate in double.
double inner_product(std::span<const float> a, std::span<const float> b);
double l2_squared(std::span<const float> a, std::span<const float> b);
double metric_score(Metric metric, std::span<const float> a, std::span<const float> b);

// Row-major read-only view over rows x cols floats.
struct MatrixView {
  std::span<const float> data;
  std::size_t rows = 0;
  std::size_t cols = 0;

  MatrixView() = default;
  MatrixView(std::span<const float> d, std::size_t r, std::size_t c);

  std::span<const float> row(std::size_t i) const { return data.subspan(i * cols, cols); }
};

struct Hit {
  std::uint64_t id = 0;
  double score = 0.0;

  bool operator==(const Hit&) const = default;
};

struct SearchResult {
  std::vector<Hit> hits;
  std::size_t k_requested = 0;

  bool operator==(const SearchResult&) const = default;
};

// Strict ranking order: better score first, then smaller id.
bool ranks_before(Metric metric, const Hit& a, const Hit& b);

// Keeps the best k candidates, sorted by ranks_before.
SearchResult select_top_k(std::vector<Hit> candidates, std::size_t k, Metric metric);

}  // namespace plagdet::vecindex

#endif  // PLAGDET_VECINDEX_DISTANCE_H_
