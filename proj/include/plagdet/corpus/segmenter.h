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

#ifndef PLAGDET_CORPUS_SEGMENTER_H_
#define PLAGDET_CORPUS_SEGMENTER_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "plagdet/corpus/types.h"
#include "plagdet/embed/tokenizer.h"

namespace plagdet::corpus {

// Paragraphs that fit in max_tokens become one segment each. Longer paragraphs
// are packed greedily sentence by sentence; a sentence longer than the limit
// is cut at every max_tokens-th token. Segment ids count up from first_id.
std::vector<Segment> segment_document(std::string_view doc_id, std::string_view text,
                                      std::size_t max_tokens = embed::kDefaultMaxTokens,
                                      std::uint64_t first_id = 0);

}  // namespace plagdet::corpus

#endif  // PLAGDET_CORPUS_SEGMENTER_H_
