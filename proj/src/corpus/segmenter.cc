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

#include "plagdet/corpus/segmenter.h"

#include <string>

#include "plagdet/common/error.h"
#include "plagdet/corpus/sentences.h"

namespace plagdet::corpus {
namespace {

// Pieces of at most max_tokens tokens. Each piece runs up to the first byte
// of the next piece's first token, so nothing between pieces is lost.
std::vector<std::string_view> hard_split(std::string_view sentence, std::size_t max_tokens) {
  const auto spans = embed::tokenize_spans(sentence);
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  for (std::size_t t = max_tokens; t < spans.size(); t += max_tokens) {
    const std::size_t cut = spans[t].begin;
    out.push_back(trim(sentence.substr(begin, cut - begin)));
    begin = cut;
  }
  out.push_back(trim(sentence.substr(begin)));
  return out;
}

}  // namespace

std::vector<Segment> segment_document(std::string_view doc_id, std::string_view text,
                                      std::size_t max_tokens, std::uint64_t first_id) {
  if (max_tokens == 0) throw Error(ErrorCode::kInvalidArgument, "max_tokens must be >= 1");
  std::vector<Segment> out;
  std::uint64_t next_id = first_id;
  auto emit = [&](std::string body, std::size_t tokens) {
    if (body.empty()) return;
    out.push_back(Segment{next_id++, std::string(doc_id), std::move(body), tokens});
  };

  for (std::string_view para : split_paragraphs(text)) {
    const std::size_t para_tokens = embed::count_tokens(para);
    if (para_tokens <= max_tokens) {
      if (para_tokens > 0) emit(std::string(para), para_tokens);
      continue;
    }
    std::vector<std::string_view> current;
    std::size_t current_tokens = 0;
    auto flush = [&]() {
      if (!current.empty()) emit(join(current, " "), current_tokens);
      current.clear();
      current_tokens = 0;
    };
    for (std::string_view sentence : split_sentences(para)) {
      const std::size_t n = embed::count_tokens(sentence);
      if (n > max_tokens) {
        flush();
        for (std::string_view piece : hard_split(sentence, max_tokens)) {
          emit(std::string(piece), embed::count_tokens(piece));
        }
        continue;
      }
      if (current_tokens + n > max_tokens) flush();
      current.push_back(sentence);
      current_tokens += n;
    }
    flush();
  }
  return out;
}

}  // namespace plagdet::corpus
