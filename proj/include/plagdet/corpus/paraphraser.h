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

#ifndef PLAGDET_CORPUS_PARAPHRASER_H_
#define PLAGDET_CORPUS_PARAPHRASER_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plagdet::corpus {

// Lowercase word -> replacement candidates.
using SynonymTable = std::map<std::string, std::vector<std::string>, std::less<>>;

// The bundled table (a little over 200 entries). No replacement is itself a key.
const SynonymTable& default_synonym_table();
// Keys of the bundled table in a fixed order.
const std::vector<std::string>& synonym_table_words();
// Function words swapped by the rule paraphraser: this/that, also/additionally.
const SynonymTable& function_word_swaps();

enum class ParaphraseKind { kRuleStub, kExternal };

struct ParaphraseProviderConfig {
  ParaphraseKind kind = ParaphraseKind::kRuleStub;
  std::uint64_t seed = 0;
  std::optional<std::string> endpoint;  // present iff kind == kExternal

  void validate() const;
};

class Paraphraser {
 public:
  virtual ~Paraphraser() = default;
  // salt selects an independent random stream for repeated calls on one text.
  virtual std::string paraphrase(std::string_view text, std::uint64_t salt = 0) const = 0;
};

// Replaces every word found in the synonym table with a seeded choice among
// its candidates and swaps each function word with probability swap_rate.
// Case of the first letter (or the whole word, if all caps) is kept. Only
// ASCII letter runs are considered words, so punctuation and sentence count
// are untouched.
class RuleParaphraser final : public Paraphraser {
 public:
  explicit RuleParaphraser(std::uint64_t seed, SynonymTable table = default_synonym_table(),
                           double substitution_rate = 1.0, double swap_rate = 0.5);
  std::string paraphrase(std::string_view text, std::uint64_t salt = 0) const override;

 private:
  std::uint64_t seed_;
  SynonymTable table_;
  double substitution_rate_;
  double swap_rate_;
};

// POST <endpoint> {"text": ...} -> {"text": ...}; the returned text is used
// verbatim. Throws kRemoteUnavailable.
class ExternalParaphraser final : public Paraphraser {
 public:
  explicit ExternalParaphraser(std::string endpoint,
                               std::chrono::milliseconds timeout = std::chrono::seconds(60));
  std::string paraphrase(std::string_view text, std::uint64_t salt = 0) const override;

 private:
  std::string endpoint_;
  std::chrono::milliseconds timeout_;
};

std::unique_ptr<Paraphraser> make_paraphraser(const ParaphraseProviderConfig& config);

std::string paraphrase(std::string_view text, const ParaphraseProviderConfig& config);

}  // namespace plagdet::corpus

#endif  // PLAGDET_CORPUS_PARAPHRASER_H_
