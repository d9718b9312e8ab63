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

#ifndef PLAGDET_CORPUS_JSONL_H_
#define PLAGDET_CORPUS_JSONL_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "plagdet/corpus/types.h"

namespace plagdet::corpus {

// Corpus lines: {"id": <u64>, "doc_id": <string>, "text": <string>}.
// Dataset lines: {"t1": <string>, "t2": <string>, "label": 0|1|2}.
// Blank lines are skipped. Malformed lines, empty texts, unknown labels and
// repeated segment ids throw kCorruptFile naming the 1-based line number.

Segment segment_from_json(const nlohmann::json& j);
nlohmann::ordered_json segment_to_json(const Segment& s);

std::vector<Segment> parse_corpus(std::istream& in);
std::vector<Segment> read_corpus(const std::filesystem::path& path);
void write_corpus(std::ostream& out, std::span<const Segment> segments);
void write_corpus(const std::filesystem::path& path, std::span<const Segment> segments);

std::vector<TextPair> parse_pairs(std::istream& in);
std::vector<TextPair> read_pairs(const std::filesystem::path& path);
void write_pairs(std::ostream& out, std::span<const TextPair> pairs);
void write_pairs(const std::filesystem::path& path, std::span<const TextPair> pairs);

}  // namespace plagdet::corpus

#endif  // PLAGDET_CORPUS_JSONL_H_
