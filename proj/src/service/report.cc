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

#include "plagdet/service/report.h"

namespace plagdet::service {

nlohmann::ordered_json candidate_to_json(const Candidate& c) {
  nlohmann::ordered_json j;
  j["rank"] = c.rank;
  j["segment_id"] = c.segment_id;
  j["doc_id"] = c.doc_id;
  j["text"] = c.text;
  j["score"] = c.score;
  j["label"] = std::string(classifier::label_name(c.label));
  j["label_index"] = classifier::label_index(c.label);
  j["probabilities"] = c.probabilities;
  return j;
}

nlohmann::ordered_json report_to_json(const DetectionReport& r, bool include_timings) {
  nlohmann::ordered_json j;
  j["query_text"] = r.query_text;
  j["k"] = r.k;
  j["nprobe"] = r.nprobe;
  j["strategy"] = r.strategy;
  auto cands = nlohmann::ordered_json::array();
  for (const auto& c : r.candidates) cands.push_back(candidate_to_json(c));
  j["candidates"] = std::move(cands);
  if (include_timings) {
    j["timings"] = {{"embed_ms", r.timings.embed_ms},
                    {"retrieve_ms", r.timings.retrieve_ms},
                    {"classify_ms", r.timings.classify_ms}};
  }
  return j;
}

}  // namespace plagdet::service
