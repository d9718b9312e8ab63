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

#ifndef PLAGDET_EMBED_TOKENIZER_H_
#define PLAGDET_EMBED_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace plagdet::embed {

// Token budget of the sentence encoder; segments are cut to fit it.
inline constexpr std::size_t kDefaultMaxTokens = 512;

struct TokenSequence {
  std::vector<std::string> tokens;

  std::size_t count() const { return tokens.size(); }
  bool operator==(const TokenSequence&) const = default;
};

// A token together with the byte range it came from in the source text.
struct TokenSpan {
  std::string token;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Lowercases, splits on Unicode whitespace and punctuation, drops punctuation
// runs and keeps at most max_tokens tokens. Invalid UTF-8 bytes act as
// separators.
TokenSequence tokenize(std::string_view text,
                       std::size_t max_tokens = kDefaultMaxTokens);

// Same splitting rules without truncation, with source byte offsets.
std::vector<TokenSpan> tokenize_spans(std::string_view text);

std::size_t count_tokens(std::string_view text);

}  // namespace plagdet::embed

#endif  // PLAGDET_EMBED_TOKENIZER_H_
