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

#ifndef PLAGDET_CORPUS_SENTENCES_H_
#define PLAGDET_CORPUS_SENTENCES_H_

#include <string>
#include <string_view>
#include <vector>

namespace plagdet::corpus {

// Sentences end at '.', '!' or '?' followed by whitespace. Each returned
// sentence keeps its terminal punctuation and is trimmed; trailing text without
// a terminator is the last sentence. Abbreviations are not special-cased.
std::vector<std::string_view> split_sentences(std::string_view text);

// Paragraphs are separated by one or more blank lines. Returned trimmed.
std::vector<std::string_view> split_paragraphs(std::string_view text);

std::string_view trim(std::string_view s);
std::string join(const std::vector<std::string_view>& parts, std::string_view sep);

}  // namespace plagdet::corpus

#endif  // PLAGDET_CORPUS_SENTENCES_H_
