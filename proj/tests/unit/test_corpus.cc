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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "plagdet/corpus/generators.h"
#include "plagdet/corpus/jsonl.h"
#include "plagdet/corpus/paraphraser.h"
#include "plagdet/corpus/segmenter.h"
#include "plagdet/corpus/sentences.h"
#include "plagdet/corpus/synthetic.h"
#include "plagdet/embed/provider.h"
#include "plagdet/embed/tokenizer.h"
#include "test_support.h"

namespace plagdet::corpus {
namespace {

using classifier::PlagiarismLabel;

// Reference token count for plain ASCII word text: whitespace-separated runs.
std::size_t count_words(const std::string& s) {
  std::istringstream in(s);
  std::string w;
  std::size_t n = 0;
  while (in >> w) ++n;
  return n;
}

std::vector<std::string> words_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string sentence_of(std::size_t words, const std::string& stem) {
  std::string s;
  for (std::size_t i = 0; i < words; ++i) s += (i ? " " : "") + stem + std::to_string(i);
  return s + ".";
}

std::multiset<std::string> sentence_multiset(std::string_view text) {
  std::multiset<std::string> out;
  for (auto s : split_sentences(text)) out.insert(std::string(s));
  return out;
}

double cosine(const embed::EmbeddingVector& a, const embed::EmbeddingVector& b) {
  double ab = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    ab += double(a.values[i]) * b.values[i];
    aa += double(a.values[i]) * a.values[i];
    bb += double(b.values[i]) * b.values[i];
  }
  return ab / std::sqrt(aa * bb);
}

std::vector<Segment> small_corpus(std::size_t docs, std::uint64_t seed) {
  SyntheticCorpusConfig cfg;
  cfg.documents = docs;
  cfg.paragraphs_per_document = 4;
  cfg.topics = 5;
  cfg.seed = seed;
  return generate_corpus(cfg);
}

// ---- sentences

TEST(Sentences, SplitsAtTerminalPunctuation) {
  const auto s = split_sentences("One two. Three four! Five six? Seven");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], "One two.");
  EXPECT_EQ(s[2], "Five six?");
  EXPECT_EQ(s[3], "Seven");
  EXPECT_EQ(split_sentences("v1.2 is out.").size(), 1u);
  EXPECT_TRUE(split_sentences("   ").empty());
}

TEST(Sentences, Paragraphs) {
  const auto p = split_paragraphs("a b.\nc d.\n\n\ne f.\n  \ng");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], "a b.\nc d.");
  EXPECT_EQ(p[1], "e f.");
  EXPECT_EQ(p[2], "g");
}

// ---- segmentation

TEST(Segment, ShortParagraphIsOneSegment) {
  const std::string text = sentence_of(100, "w");
  const auto segs = segment_document("d", text);
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_EQ(segs[0].token_count, 100u);
  EXPECT_EQ(segs[0].text, text);
  EXPECT_EQ(segs[0].doc_id, "d");
}

TEST(Segment, TwoParagraphsTwoSegments) {
  const std::string text = sentence_of(300, "a") + "\n\n" + sentence_of(300, "b");
  const auto segs = segment_document("d", text, 512, 10);
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_EQ(segs[0].token_count, 300u);
  EXPECT_EQ(segs[1].token_count, 300u);
  EXPECT_EQ(segs[0].id, 10u);
  EXPECT_EQ(segs[1].id, 11u);
}

TEST(Segment, LongParagraphPackedUnderCap) {
  std::string text;
  for (int s = 0; s < 13; ++s) text += (s ? " " : "") + sentence_of(100, "s" + std::to_string(s) + "w");
  ASSERT_EQ(count_words(text), 1300u);
  const auto segs = segment_document("d", text);
  std::vector<std::string> joined;
  for (const auto& seg : segs) {
    EXPECT_LE(count_words(seg.text), 512u);
    EXPECT_EQ(seg.token_count, count_words(seg.text));
    for (auto& w : words_of(seg.text)) joined.push_back(w);
  }
  EXPECT_EQ(joined, words_of(text));
  EXPECT_EQ(segs.size(), 3u);
}

TEST(Segment, OverlongSentenceIsHardSplit) {
  const std::string text = sentence_of(1100, "x");
  const auto segs = segment_document("d", text, 512);
  ASSERT_EQ(segs.size(), 3u);
  std::vector<std::string> joined;
  for (const auto& seg : segs) {
    EXPECT_LE(seg.token_count, 512u);
    for (auto& w : words_of(seg.text)) joined.push_back(w);
  }
  EXPECT_EQ(joined, words_of(text));
}

TEST(Segment, EmptyDocumentHasNoSegments) {
  EXPECT_TRUE(segment_document("d", "  \n\n ").empty());
  EXPECT_ERROR_CODE(segment_document("d", "x", 0), ErrorCode::kInvalidArgument);
}

// ---- shuffle

TEST(Shuffle, SingleSentenceUnchanged) {
  EXPECT_EQ(shuffle_plagiarize("Only one sentence here.", 4), "Only one sentence here.");
}

TEST(Shuffle, PreservesSentencesAndChangesOrder) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::string text = "A b. C d! E f? G h. I j.";
    const auto out = shuffle_plagiarize(text, seed);
    EXPECT_EQ(sentence_multiset(out), sentence_multiset(text));
    EXPECT_NE(out, text);
  }
  EXPECT_EQ(shuffle_plagiarize("First one. Second one.", 1), "Second one. First one.");
}

TEST(Shuffle, SeededSnapshot) {
  const std::string text = "Alpha runs. Beta walks. Gamma sits. Delta jumps. Epsilon sleeps.";
  // Recorded once from this implementation; guards against silent changes in
  // the seeded permutation.
  EXPECT_EQ(shuffle_plagiarize(text, 2024),
            "Delta jumps. Alpha runs. Gamma sits. Beta walks. Epsilon sleeps.");
  EXPECT_EQ(shuffle_plagiarize(text, 2024), shuffle_plagiarize(text, 2024));
}

// ---- negatives

TEST(Negative, TwoDocumentsOneCrossPair) {
  const std::vector<Segment> segs{{0, "a", "Text of a.", 3}, {1, "b", "Text of b.", 3}};
  const auto pairs = negative_sample(segs, 3);
  ASSERT_EQ(pairs.size(), 2u);
  std::set<std::set<std::string>> unordered;
  for (const auto& p : pairs) {
    EXPECT_EQ(p.label, PlagiarismLabel::kNoPlagiarism);
    unordered.insert({p.t1, p.t2});
  }
  EXPECT_EQ(unordered.size(), 1u);
}

TEST(Negative, NeverSameDocumentAndReproducible) {
  const auto segs = small_corpus(10, 1);
  std::map<std::string, std::string> doc_of;
  for (const auto& s : segs) doc_of[s.text] = s.doc_id;
  const auto a = negative_sample(segs, 77, 2);
  EXPECT_EQ(a.size(), 2 * segs.size());
  for (const auto& p : a) EXPECT_NE(doc_of.at(p.t1), doc_of.at(p.t2));
  const auto b = negative_sample(segs, 77, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Negative, SingleDocumentRejected) {
  const std::vector<Segment> segs{{0, "a", "x.", 1}, {1, "a", "y.", 1}};
  EXPECT_ERROR_CODE(negative_sample(segs, 1), ErrorCode::kInsufficientDocuments);
}

// ---- paraphrase

TEST(Paraphrase, TableSubstitution) {
  SynonymTable table{{"fast", {"quick"}}};
  RuleParaphraser p(1, table, 1.0, 0.0);
  EXPECT_EQ(p.paraphrase("The program runs fast"), "The program runs quick");
  EXPECT_EQ(p.paraphrase("FAST. Fast."), "QUICK. Quick.");
}

TEST(Paraphrase, NoTableWordsOnlySwapsFunctionWords) {
  RuleParaphraser p(5, SynonymTable{});
  const std::string text = "Zorb this quib. Also that florp.";
  const auto out = p.paraphrase(text);
  auto a = words_of(text), b = words_of(out);
  ASSERT_EQ(a.size(), b.size());
  const auto& swaps = function_word_swaps();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    std::string lower = a[i];
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    EXPECT_TRUE(swaps.count(lower)) << a[i] << " -> " << b[i];
  }
}

TEST(Paraphrase, PreservesSentenceCount) {
  const auto segs = small_corpus(10, 2);
  RuleParaphraser p(11);
  for (std::size_t i = 0; i < 100 && i < segs.size(); ++i) {
    EXPECT_EQ(split_sentences(p.paraphrase(segs[i].text, i)).size(), split_sentences(segs[i].text).size());
  }
}

TEST(Paraphrase, DeterministicAndChangesTableWords) {
  RuleParaphraser p(3);
  const std::string text = "The method is fast and the results are good.";
  EXPECT_EQ(p.paraphrase(text, 9), p.paraphrase(text, 9));
  EXPECT_NE(p.paraphrase(text, 9), text);
}

TEST(Paraphrase, TableHasNoChains) {
  const auto& table = default_synonym_table();
  EXPECT_GE(table.size(), 200u);
  for (const auto& [word, alts] : table) {
    EXPECT_FALSE(alts.empty()) << word;
    for (const auto& a : alts) EXPECT_EQ(table.count(a), 0u) << word << " -> " << a;
  }
}

TEST(Paraphrase, ExternalProvider) {
  testing::StubServer stub;
  stub.server().Post("/para", [](const httplib::Request& req, httplib::Response& res) {
    const auto body = nlohmann::json::parse(req.body);
    std::string t = body.at("text");
    std::reverse(t.begin(), t.end());
    res.set_content(nlohmann::json{{"text", t}}.dump(), "application/json");
  });
  stub.server().Post("/bad", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"nope\":1}", "application/json");
  });
  stub.start();
  ParaphraseProviderConfig cfg;
  cfg.kind = ParaphraseKind::kExternal;
  cfg.endpoint = stub.url("/para");
  EXPECT_EQ(paraphrase("abc", cfg), "cba");
  ExternalParaphraser bad(stub.url("/bad"));
  EXPECT_ERROR_CODE(bad.paraphrase("abc"), ErrorCode::kRemoteUnavailable);
  ExternalParaphraser down("http://127.0.0.1:" + std::to_string(testing::closed_port()) + "/p",
                           std::chrono::milliseconds(500));
  EXPECT_ERROR_CODE(down.paraphrase("abc"), ErrorCode::kRemoteUnavailable);
}

TEST(Paraphrase, ConfigValidation) {
  ParaphraseProviderConfig cfg;
  cfg.kind = ParaphraseKind::kExternal;
  EXPECT_ERROR_CODE(cfg.validate(), ErrorCode::kInvalidArgument);
}

// ---- dataset

TEST(Dataset, CountsPerLabel) {
  auto segs = small_corpus(30, 3);
  segs.resize(100);
  RuleParaphraser p(1);
  const auto pairs = build_dataset(segs, p, 5, PairCounts{1, 1, 1, 0});
  ASSERT_EQ(pairs.size(), 300u);
  std::map<PlagiarismLabel, int> by_label;
  for (const auto& pr : pairs) {
    ++by_label[pr.label];
    EXPECT_FALSE(pr.t1.empty());
    EXPECT_FALSE(pr.t2.empty());
    if (pr.label == PlagiarismLabel::kShufflePlagiarism) {
      EXPECT_EQ(sentence_multiset(pr.t1), sentence_multiset(pr.t2));
    }
  }
  EXPECT_EQ(by_label[PlagiarismLabel::kNoPlagiarism], 100);
  EXPECT_EQ(by_label[PlagiarismLabel::kImitationPlagiarism], 100);
  EXPECT_EQ(by_label[PlagiarismLabel::kShufflePlagiarism], 100);
}

TEST(Dataset, RewrittenNegativesAreParaphrasedCrossPairs) {
  const auto segs = small_corpus(10, 4);
  RuleParaphraser p(2);
  const auto pairs = build_dataset(segs, p, 6, PairCounts{0, 0, 0, 2});
  ASSERT_EQ(pairs.size(), 2 * segs.size());
  std::set<std::string> originals;
  for (const auto& s : segs) originals.insert(s.text);
  for (const auto& pr : pairs) {
    EXPECT_EQ(pr.label, PlagiarismLabel::kNoPlagiarism);
    EXPECT_TRUE(originals.count(pr.t1));
    EXPECT_NE(pr.t1, pr.t2);
  }
}

TEST(Dataset, PureFunctionOfSeed) {
  const auto segs = small_corpus(8, 5);
  RuleParaphraser p(3);
  const PairCounts counts{2, 2, 2, 1};
  EXPECT_EQ(build_dataset(segs, p, 9, counts), build_dataset(segs, p, 9, counts));
  EXPECT_NE(build_dataset(segs, p, 9, counts), build_dataset(segs, p, 10, counts));
}

TEST(Split, StratifiedEightTwo) {
  std::vector<TextPair> pairs;
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 10; ++i)
      pairs.push_back({"a" + std::to_string(l * 10 + i), "b", PlagiarismLabel(l)});
  const auto [train, test] = split_dataset(pairs, 0.8, 4);
  std::map<PlagiarismLabel, int> tr, te;
  for (const auto& p : train) ++tr[p.label];
  for (const auto& p : test) ++te[p.label];
  for (int l = 0; l < 3; ++l) {
    EXPECT_EQ(tr[PlagiarismLabel(l)], 8);
    EXPECT_EQ(te[PlagiarismLabel(l)], 2);
  }
  std::set<std::string> a, b;
  for (const auto& p : train) a.insert(p.t1);
  for (const auto& p : test) b.insert(p.t1);
  for (const auto& t : b) EXPECT_EQ(a.count(t), 0u);
  EXPECT_EQ(a.size() + b.size(), pairs.size());
  const auto again = split_dataset(pairs, 0.8, 4);
  EXPECT_EQ(again.first, train);
  EXPECT_EQ(again.second, test);
}

TEST(Split, Errors) {
  const std::vector<TextPair> one{{"a", "b", PlagiarismLabel::kNoPlagiarism}};
  EXPECT_ERROR_CODE(split_dataset(one), ErrorCode::kTooFewSamples);
  const std::vector<TextPair> two{one[0], one[0]};
  EXPECT_ERROR_CODE(split_dataset(two, 1.0), ErrorCode::kInvalidArgument);
}

TEST(EmbedPairs, SharesVectorsOfRepeatedTexts) {
  const std::vector<TextPair> pairs{{"x y", "y z", PlagiarismLabel::kNoPlagiarism},
                                    {"x y", "z w", PlagiarismLabel::kShufflePlagiarism}};
  embed::HashEmbedder provider(32, 1);
  const auto data = embed_pairs(pairs, provider);
  ASSERT_EQ(data.size(), 2u);
  EXPECT_EQ(data.items()[0].first, data.items()[1].first);
  EXPECT_EQ(data.items()[1].label, PlagiarismLabel::kShufflePlagiarism);
  const auto direct = provider.embed("z w");
  const auto stored = data.second(1);
  EXPECT_TRUE(std::equal(stored.begin(), stored.end(), direct.values.begin()));
}

// ---- JSONL

TEST(Jsonl, CorpusRoundTrip) {
  testing::TempDir dir;
  const std::vector<Segment> segs{{3, "doc-a", "Hello there.", 2}, {7, "doc-b", "Second \"quoted\" text.", 3}};
  write_corpus(dir / "c.jsonl", segs);
  const auto back = read_corpus(dir / "c.jsonl");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].id, 7u);
  EXPECT_EQ(back[1].text, segs[1].text);
  EXPECT_EQ(back[0].token_count, 2u);
}

TEST(Jsonl, CorpusErrorsCarryLineNumbers) {
  const auto expect_line = [](const std::string& body, const std::string& needle) {
    std::istringstream in(body);
    try {
      parse_corpus(in);
      ADD_FAILURE() << "accepted: " << body;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kCorruptFile);
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  expect_line("{\"id\":1,\"doc_id\":\"a\",\"text\":\"x\"}\nnot json\n", "line 2");
  expect_line("{\"id\":1,\"doc_id\":\"a\",\"text\":\"x\",\"extra\":1}\n", "unknown");
  expect_line("{\"id\":-1,\"doc_id\":\"a\",\"text\":\"x\"}\n", "line 1");
  expect_line("{\"id\":1,\"doc_id\":\"a\",\"text\":\"\"}\n", "empty");
  expect_line("{\"id\":1,\"doc_id\":\"a\",\"text\":\"x\"}\n{\"id\":1,\"doc_id\":\"b\",\"text\":\"y\"}\n",
              "duplicate");
}

TEST(Jsonl, IntegerDocIdAndBlankLines) {
  std::istringstream in("\n{\"id\":1,\"doc_id\":5,\"text\":\"x y\"}\n\n");
  const auto segs = parse_corpus(in);
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_EQ(segs[0].doc_id, "5");
}

TEST(Jsonl, PairsRoundTripAndValidation) {
  testing::TempDir dir;
  const std::vector<TextPair> pairs{{"a b", "b a", PlagiarismLabel::kShufflePlagiarism},
                                    {"c", "d", PlagiarismLabel::kNoPlagiarism}};
  write_pairs(dir / "p.jsonl", pairs);
  EXPECT_EQ(read_pairs(dir / "p.jsonl"), pairs);
  EXPECT_EQ(testing::slurp(dir / "p.jsonl").substr(0, 35), "{\"t1\":\"a b\",\"t2\":\"b a\",\"label\":2}\n{");
  std::istringstream bad("{\"t1\":\"a\",\"t2\":\"b\",\"label\":3}\n");
  EXPECT_ERROR_CODE(parse_pairs(bad), ErrorCode::kCorruptFile);
  EXPECT_ERROR_CODE(read_pairs(dir / "missing.jsonl"), ErrorCode::kIoFailure);
}

// ---- synthetic corpus and embedding properties

TEST(Synthetic, DeterministicShape) {
  SyntheticCorpusConfig cfg;
  cfg.documents = 6;
  cfg.paragraphs_per_document = 3;
  cfg.seed = 42;
  const auto a = generate_corpus(cfg);
  EXPECT_EQ(a, generate_corpus(cfg));
  ASSERT_EQ(a.size(), 18u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, i);
    EXPECT_LE(a[i].token_count, 512u);
    const auto n = split_sentences(a[i].text).size();
    EXPECT_GE(n, cfg.min_sentences);
    EXPECT_LE(n, cfg.max_sentences);
  }
  EXPECT_EQ(a[0].doc_id, "doc-0000");
  cfg.seed = 43;
  EXPECT_NE(a, generate_corpus(cfg));
}

TEST(Synthetic, DefaultScale) {
  SyntheticCorpusConfig cfg;
  cfg.seed = 7;
  EXPECT_EQ(generate_corpus(cfg).size(), 5000u);
}

TEST(EmbeddingProperties, UnrelatedSegmentsAreDissimilar) {
  const auto segs = small_corpus(60, 8);
  embed::HashEmbedder provider(768, 0);
  std::mt19937_64 gen(1);
  double worst = -1, sum = 0;
  int pairs = 0;
  while (pairs < 100) {
    const auto& a = segs[gen() % segs.size()];
    const auto& b = segs[gen() % segs.size()];
    if (a.doc_id == b.doc_id) continue;
    const double c = cosine(provider.embed(a.text), provider.embed(b.text));
    worst = std::max(worst, c);
    sum += c;
    ++pairs;
  }
  RecordProperty("max_cosine", std::to_string(worst));
  RecordProperty("mean_cosine", std::to_string(sum / pairs));
  EXPECT_LT(worst, 0.5);
}

TEST(EmbeddingProperties, ShuffledSegmentsStaySimilar) {
  const auto segs = small_corpus(20, 9);
  embed::HashEmbedder provider(768, 0);
  double worst = 2;
  for (std::size_t i = 0; i < 50; ++i) {
    const auto& s = segs[i];
    worst = std::min(worst, cosine(provider.embed(s.text), provider.embed(shuffle_plagiarize(s.text, i))));
  }
  RecordProperty("min_cosine", std::to_string(worst));
  EXPECT_GE(worst, 0.9);
}

}  // namespace
}  // namespace plagdet::corpus
