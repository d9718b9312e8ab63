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

#ifndef PLAGDET_CORPUS_SYNTHETIC_H_
#define PLAGDET_CORPUS_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plagdet/corpus/types.h"

namespace plagdet::corpus {

// Seeded generator of plain-text documents. Each document belongs to a topic
// and is written as paragraphs of sentences drawn from four word pools:
// function words, synonym-table words, topic words and document words.
// Topic and document words are pronounceable nonsense words.
struct SyntheticCorpusConfig {
  std::size_t documents = 500;
  std::size_t paragraphs_per_document = 10;
  std::size_t topics = 20;
  std::size_t min_sentences = 4;
  std::size_t max_sentences = 7;
  std::size_t min_words = 8;
  std::size_t max_words = 16;
  std::size_t topic_vocabulary = 120;
  std::size_t document_vocabulary = 30;
  // Probability of drawing each word from the function, synonym and topic
  // pools; the remainder comes from the document pool.
  double function_share = 0.30;
  double synonym_share = 0.25;
  double topic_share = 0.25;
  std::uint64_t seed = 0;
};

struct SyntheticDocument {
  std::string doc_id;
  std::size_t topic = 0;
  std::string text;  // paragraphs separated by blank lines
};

std::vector<SyntheticDocument> generate_documents(const SyntheticCorpusConfig& config);

// generate_documents followed by segment_document, ids numbered from 0.
std::vector<Segment> generate_corpus(const SyntheticCorpusConfig& config);

}  // namespace plagdet::corpus

#endif  // PLAGDET_CORPUS_SYNTHETIC_H_
