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

#include "plagdet/corpus/synthetic.h"

#include <cstdio>
#include <set>

#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"
#include "plagdet/corpus/paraphraser.h"
#include "plagdet/corpus/segmenter.h"

namespace plagdet::corpus {
namespace {

const std::vector<std::string>& function_words() {
  static const std::vector<std::string> kWords = {
      "the", "a",    "of",   "and",  "to",    "in",   "is",   "for",   "on",
      "with", "as",  "by",   "this", "that",  "also", "it",   "are",   "was",
      "be",  "at",   "from", "or",   "an",    "which", "its", "their", "these"};
  return kWords;
}

std::string make_word(Rng& rng) {
  static const char* kOnsets[] = {"b", "c", "d", "f", "g", "h", "k", "l", "m", "n", "p",
                                  "r", "s", "t", "v", "z", "br", "cl", "dr", "gr", "pl",
                                  "st", "tr", "sh", "ch", "th"};
  static const char* kVowels[] = {"a", "e", "i", "o", "u", "ai", "ea", "io", "ou"};
  static const char* kCodas[] = {"", "", "", "n", "r", "s", "l", "x", "m", "t"};
  const std::size_t syllables = 2 + rng.below(2);
  std::string w;
  for (std::size_t i = 0; i < syllables; ++i) {
    w += kOnsets[rng.below(std::size(kOnsets))];
    w += kVowels[rng.below(std::size(kVowels))];
  }
  w += kCodas[rng.below(std::size(kCodas))];
  return w;
}

class Vocabulary {
 public:
  explicit Vocabulary(std::uint64_t seed) : rng_(seed) {
    for (const auto& w : function_words()) used_.insert(w);
    for (const auto& w : synonym_table_words()) used_.insert(w);
    for (const auto& [k, alts] : default_synonym_table()) {
      for (const auto& a : alts) used_.insert(a);
    }
  }

  std::vector<std::string> fresh(std::size_t n) {
    std::vector<std::string> out;
    while (out.size() < n) {
      std::string w = make_word(rng_);
      if (used_.insert(w).second) out.push_back(std::move(w));
    }
    return out;
  }

 private:
  Rng rng_;
  std::set<std::string> used_;
};

const std::string& pick(Rng& rng, const std::vector<std::string>& pool) {
  return pool[rng.below(pool.size())];
}

std::string sentence(Rng& rng, const SyntheticCorpusConfig& c,
                     const std::vector<std::string>& topic_words,
                     const std::vector<std::string>& doc_words) {
  const std::size_t n = c.min_words + rng.below(c.max_words - c.min_words + 1);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rng.uniform();
    const std::string* w;
    if (r < c.function_share) {
      w = &pick(rng, function_words());
    } else if (r < c.function_share + c.synonym_share) {
      w = &pick(rng, synonym_table_words());
    } else if (r < c.function_share + c.synonym_share + c.topic_share) {
      w = &pick(rng, topic_words);
    } else {
      w = &pick(rng, doc_words);
    }
    if (i) s += ' ';
    s += *w;
  }
  s[0] = static_cast<char>(s[0] - 'a' + 'A');
  s += '.';
  return s;
}

}  // namespace

std::vector<SyntheticDocument> generate_documents(const SyntheticCorpusConfig& c) {
  if (c.topics == 0 || c.min_sentences == 0 || c.min_words == 0 ||
      c.max_sentences < c.min_sentences || c.max_words < c.min_words ||
      c.topic_vocabulary == 0 || c.document_vocabulary == 0) {
    throw Error(ErrorCode::kInvalidArgument, "inconsistent synthetic corpus configuration");
  }
  Vocabulary vocab(derive_seed(c.seed, 1));
  std::vector<std::vector<std::string>> topic_words;
  for (std::size_t t = 0; t < c.topics; ++t) topic_words.push_back(vocab.fresh(c.topic_vocabulary));

  Rng rng(derive_seed(c.seed, 2));
  std::vector<SyntheticDocument> docs;
  docs.reserve(c.documents);
  for (std::size_t d = 0; d < c.documents; ++d) {
    SyntheticDocument doc;
    char id[32];
    std::snprintf(id, sizeof(id), "doc-%04zu", d);
    doc.doc_id = id;
    doc.topic = static_cast<std::size_t>(rng.below(c.topics));
    const auto doc_words = vocab.fresh(c.document_vocabulary);
    for (std::size_t p = 0; p < c.paragraphs_per_document; ++p) {
      if (p) doc.text += "\n\n";
      const std::size_t ns = c.min_sentences + rng.below(c.max_sentences - c.min_sentences + 1);
      for (std::size_t s = 0; s < ns; ++s) {
        if (s) doc.text += ' ';
        doc.text += sentence(rng, c, topic_words[doc.topic], doc_words);
      }
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Segment> generate_corpus(const SyntheticCorpusConfig& config) {
  std::vector<Segment> out;
  for (const auto& doc : generate_documents(config)) {
    auto segs = segment_document(doc.doc_id, doc.text, embed::kDefaultMaxTokens, out.size());
    for (auto& s : segs) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace plagdet::corpus
