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

#include "plagdet/corpus/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"
#include "plagdet/corpus/sentences.h"

namespace plagdet::corpus {

using classifier::PlagiarismLabel;

std::string shuffle_plagiarize(std::string_view text, std::uint64_t seed) {
  std::vector<std::string_view> sentences = split_sentences(text);
  if (sentences.size() < 2) return std::string(text);
  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  do {
    rng.shuffle(std::span<std::size_t>(order));
  } while (std::is_sorted(order.begin(), order.end()));
  std::vector<std::string_view> shuffled;
  shuffled.reserve(order.size());
  for (std::size_t i : order) shuffled.push_back(sentences[i]);
  return join(shuffled, " ");
}

namespace {

void require_two_documents(std::span<const Segment> segments) {
  std::set<std::string_view> docs;
  for (const auto& s : segments) {
    docs.insert(s.doc_id);
    if (docs.size() >= 2) return;
  }
  throw Error(ErrorCode::kInsufficientDocuments, "need segments from at least two documents");
}

void sample_negatives_for(std::span<const Segment> segments, std::size_t anchor,
                          std::size_t per_segment, std::uint64_t seed,
                          std::size_t other_count, std::vector<TextPair>& out) {
  const Segment& a = segments[anchor];
  Rng rng(derive_seed(seed, a.id));
  std::vector<std::size_t> chosen;
  if (per_segment >= other_count) {
    for (std::size_t j = 0; j < segments.size(); ++j) {
      if (segments[j].doc_id != a.doc_id) chosen.push_back(j);
    }
  } else {
    std::set<std::size_t> seen;
    while (chosen.size() < per_segment) {
      const auto j = static_cast<std::size_t>(rng.below(segments.size()));
      if (segments[j].doc_id == a.doc_id || !seen.insert(j).second) continue;
      chosen.push_back(j);
    }
  }
  for (std::size_t j : chosen) {
    out.push_back(TextPair{a.text, segments[j].text, PlagiarismLabel::kNoPlagiarism});
  }
}

std::unordered_map<std::string_view, std::size_t> doc_sizes(std::span<const Segment> segments) {
  std::unordered_map<std::string_view, std::size_t> sizes;
  for (const auto& s : segments) ++sizes[s.doc_id];
  return sizes;
}

}  // namespace

std::vector<TextPair> negative_sample(std::span<const Segment> segments, std::uint64_t seed,
                                      std::size_t per_segment) {
  require_two_documents(segments);
  const auto sizes = doc_sizes(segments);
  std::vector<TextPair> out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    sample_negatives_for(segments, i, per_segment, seed,
                         segments.size() - sizes.at(segments[i].doc_id), out);
  }
  return out;
}

std::vector<TextPair> build_dataset(std::span<const Segment> segments,
                                    const Paraphraser& paraphraser, std::uint64_t seed,
                                    const PairCounts& counts) {
  require_two_documents(segments);
  const auto sizes = doc_sizes(segments);
  const std::uint64_t shuffle_seed = derive_seed(seed, 11);
  const std::uint64_t negative_seed = derive_seed(seed, 13);
  const std::uint64_t rewritten_seed = derive_seed(seed, 17);
  std::vector<TextPair> out;
  out.reserve(segments.size() * (counts.shuffle + counts.imitation + counts.negative +
                                  counts.rewritten_negative));
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    for (std::size_t r = 0; r < counts.shuffle; ++r) {
      const std::uint64_t sd = derive_seed(shuffle_seed, s.id * 1315423911ULL + r);
      out.push_back(TextPair{s.text, shuffle_plagiarize(s.text, sd),
                             PlagiarismLabel::kShufflePlagiarism});
    }
    for (std::size_t r = 0; r < counts.imitation; ++r) {
      const std::uint64_t salt = derive_seed(seed, s.id * 2654435761ULL + r);
      out.push_back(TextPair{s.text, paraphraser.paraphrase(s.text, salt),
                             PlagiarismLabel::kImitationPlagiarism});
    }
    if (counts.negative > 0) {
      sample_negatives_for(segments, i, counts.negative, negative_seed,
                           segments.size() - sizes.at(s.doc_id), out);
    }
    if (counts.rewritten_negative > 0) {
      std::vector<TextPair> partners;
      sample_negatives_for(segments, i, counts.rewritten_negative, rewritten_seed,
                           segments.size() - sizes.at(s.doc_id), partners);
      for (std::size_t r = 0; r < partners.size(); ++r) {
        const std::uint64_t salt = derive_seed(rewritten_seed, s.id * 40503ULL + r);
        out.push_back(TextPair{s.text, paraphraser.paraphrase(partners[r].t2, salt),
                               PlagiarismLabel::kNoPlagiarism});
      }
    }
  }
  return out;
}

std::pair<std::vector<TextPair>, std::vector<TextPair>> split_dataset(
    std::span<const TextPair> pairs, double ratio, std::uint64_t seed) {
  if (pairs.size() < 2) throw Error(ErrorCode::kTooFewSamples, "need at least two pairs");
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "split ratio must lie in (0, 1)");
  }
  std::vector<TextPair> train, test;
  for (std::size_t label = 0; label < classifier::kNumLabels; ++label) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (classifier::label_index(pairs[i].label) == label) idx.push_back(i);
    }
    Rng rng(derive_seed(seed, 100 + label));
    rng.shuffle(std::span<std::size_t>(idx));
    const auto n_train =
        static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(idx.size()) - 1e-9));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      (r < n_train ? train : test).push_back(pairs[idx[r]]);
    }
  }
  return {std::move(train), std::move(test)};
}

classifier::PairDataset embed_pairs(std::span<const TextPair> pairs,
                                    const embed::EmbeddingProvider& provider) {
  std::unordered_map<std::string_view, std::uint32_t> row_of;
  std::vector<std::string> unique;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> refs;
  refs.reserve(pairs.size());
  auto intern = [&](const std::string& t) {
    auto [it, inserted] = row_of.emplace(t, static_cast<std::uint32_t>(unique.size()));
    if (inserted) unique.push_back(t);
    return it->second;
  };
  for (const auto& p : pairs) refs.emplace_back(intern(p.t1), intern(p.t2));

  const auto vectors = provider.embed_batch(unique);
  classifier::PairDataset ds(provider.dimension());
  for (const auto& v : vectors) ds.add_vector(v.values);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ds.add_item(refs[i].first, refs[i].second, pairs[i].label);
  }
  return ds;
}

}  // namespace plagdet::corpus
