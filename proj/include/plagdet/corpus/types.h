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

#ifndef PLAGDET_CORPUS_TYPES_H_
#define PLAGDET_CORPUS_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "plagdet/classifier/mlp.h"

namespace plagdet::corpus {

struct Segment {
  std::uint64_t id = 0;
  std::string doc_id;
  std::string text;
  std::size_t token_count = 0;

  bool operator==(const Segment&) const = default;
};

// (original, suspect, label).
struct TextPair {
  std::string t1;
  std::string t2;
  classifier::PlagiarismLabel label = classifier::PlagiarismLabel::kNoPlagiarism;

  bool operator==(const TextPair&) const = default;
};

}  // namespace plagdet::corpus

#endif  // PLAGDET_CORPUS_TYPES_H_
