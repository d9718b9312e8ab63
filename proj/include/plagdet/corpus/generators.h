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

#ifndef PLAGDET_CORPUS_GENERATORS_H_
#define PLAGDET_CORPUS_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plagdet/classifier/trainer.h"
#include "plagdet/corpus/paraphraser.h"
#include "plagdet/corpus/types.h"
#include "plagdet/embed/provider.h"

namespace plagdet::corpus {

// Seeded permutation of the sentences, joined by single spaces. With two or
// more sentences the permutation is redrawn until it is not the identity; a
// single sentence comes back unchanged.
std::string shuffle_plagiarize(std::string_view text, std::uint64_t seed);

// For every segment, per_segment partners from other documents drawn without
// replacement (all of them if there are fewer). Throws kInsufficientDocuments
// with fewer than two distinct doc_ids.
std::vector<TextPair> negative_sample(std::span<const Segment> segments, std::uint64_t seed,
                                      std::size_t per_segment = 1);

struct PairCounts {
  std::size_t shuffle = 1;
  std::size_t imitation = 1;
  std::size_t negative = 1;
  // Extra NoPlagiarism pairs whose t2 is a paraphrase of a segment from
  // another document. They keep paraphrase wording alone from implying a
  // plagiarism label.
  std::size_t rewritten_negative = 0;
};

// Per segment, in input order: the shuffle pairs, the paraphrase pairs, the
// negative pairs, then the rewritten negatives. Throws kInsufficientDocuments.
std::vector<TextPair> build_dataset(std::span<const Segment> segments,
                                    const Paraphraser& paraphraser, std::uint64_t seed,
                                    const PairCounts& counts = {});

// Stratified split: each label's pairs are shuffled with the seed and the
// first ceil(ratio * n) go to training. Relative order within each side
// follows label, then shuffled position. Throws kTooFewSamples below two pairs.
std::pair<std::vector<TextPair>, std::vector<TextPair>> split_dataset(
    std::span<const TextPair> pairs, double ratio = 0.8, std::uint64_t seed = 0);

// Embeds each distinct text once.
classifier::PairDataset embed_pairs(std::span<const TextPair> pairs,
                                    const embed::EmbeddingProvider& provider);

}  // namespace plagdet::corpus

#endif  // PLAGDET_CORPUS_GENERATORS_H_
