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

#ifndef PLAGDET_SERVICE_REPORT_H_
#define PLAGDET_SERVICE_REPORT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "plagdet/classifier/mlp.h"

namespace plagdet::service {

struct Candidate {
  std::size_t rank = 0;  // 1-based
  std::uint64_t segment_id = 0;
  std::string doc_id;
  std::string text;
  double score = 0.0;
  classifier::PlagiarismLabel label = classifier::PlagiarismLabel::kNoPlagiarism;
  std::array<double, classifier::kNumLabels> probabilities{};

  bool operator==(const Candidate&) const = default;
};

struct Timings {
  double embed_ms = 0.0;
  double retrieve_ms = 0.0;
  double classify_ms = 0.0;
};

struct DetectionReport {
  std::string query_text;
  std::size_t k = 0;
  std::size_t nprobe = 0;
  std::string strategy;
  std::vector<Candidate> candidates;  // best retrieval score first
  Timings timings;
};

nlohmann::ordered_json candidate_to_json(const Candidate& c);
// timings are left out when include_timings is false, which makes reports
// from different runs directly comparable.
nlohmann::ordered_json report_to_json(const DetectionReport& r, bool include_timings = true);

}  // namespace plagdet::service

#endif  // PLAGDET_SERVICE_REPORT_H_
