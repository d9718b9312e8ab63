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

#include "plagdet/corpus/paraphraser.h"

#include <cctype>

#include "httplib.h"
#include "json.hpp"
#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"
#include "plagdet/embed/provider.h"

namespace plagdet::corpus {
namespace {

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::string to_lower(std::string_view w) {
  std::string out(w);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string match_case(std::string_view original, const std::string& replacement) {
  std::string out = replacement;
  bool all_upper = original.size() > 1;
  for (char c : original) {
    if (!std::isupper(static_cast<unsigned char>(c))) all_upper = false;
  }
  if (all_upper) {
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  } else if (!original.empty() && std::isupper(static_cast<unsigned char>(original[0])) &&
             !out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

}  // namespace

void ParaphraseProviderConfig::validate() const {
  if ((kind == ParaphraseKind::kExternal) != endpoint.has_value()) {
    throw Error(ErrorCode::kInvalidArgument,
                "a paraphrase endpoint is required for, and only for, the external provider");
  }
}

RuleParaphraser::RuleParaphraser(std::uint64_t seed, SynonymTable table,
                                 double substitution_rate, double swap_rate)
    : seed_(seed),
      table_(std::move(table)),
      substitution_rate_(substitution_rate),
      swap_rate_(swap_rate) {}

std::string RuleParaphraser::paraphrase(std::string_view text, std::uint64_t salt) const {
  Rng rng(derive_seed(seed_, salt));
  const SynonymTable& swaps = function_word_swaps();
  std::string out;
  out.reserve(text.size() + text.size() / 4);
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_ascii_alpha(text[i])) {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_ascii_alpha(text[j])) ++j;
    // A letter run glued to non-ASCII bytes is part of a longer word.
    const bool glued = (i > 0 && static_cast<unsigned char>(text[i - 1]) >= 0x80) ||
                       (j < text.size() && static_cast<unsigned char>(text[j]) >= 0x80);
    const std::string_view word = text.substr(i, j - i);
    const std::string lower = to_lower(word);
    std::string replacement(word);
    if (!glued) {
      if (auto it = table_.find(lower); it != table_.end() && !it->second.empty()) {
        const bool take = rng.uniform() < substitution_rate_;
        const auto pick = rng.below(it->second.size());
        if (take) replacement = match_case(word, it->second[pick]);
      } else if (auto sw = swaps.find(lower); sw != swaps.end()) {
        if (rng.uniform() < swap_rate_) replacement = match_case(word, sw->second.front());
      }
    }
    out += replacement;
    i = j;
  }
  return out;
}

ExternalParaphraser::ExternalParaphraser(std::string endpoint, std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), timeout_(timeout) {}

std::string ExternalParaphraser::paraphrase(std::string_view text, std::uint64_t) const {
  const embed::Endpoint ep = embed::parse_endpoint(endpoint_);
  httplib::Client client(ep.base);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  nlohmann::json body;
  body["text"] = std::string(text);
  auto res = client.Post(ep.path, body.dump(), "application/json");
  if (!res) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "paraphrase endpoint unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "paraphrase endpoint returned HTTP " + std::to_string(res->status));
  }
  try {
    const auto reply = nlohmann::json::parse(res->body);
    return reply.at("text").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kRemoteUnavailable, std::string("malformed paraphrase reply: ") + e.what());
  }
}

std::unique_ptr<Paraphraser> make_paraphraser(const ParaphraseProviderConfig& config) {
  config.validate();
  if (config.kind == ParaphraseKind::kExternal) {
    return std::make_unique<ExternalParaphraser>(*config.endpoint);
  }
  return std::make_unique<RuleParaphraser>(config.seed);
}

std::string paraphrase(std::string_view text, const ParaphraseProviderConfig& config) {
  return make_paraphraser(config)->paraphrase(text);
}

}  // namespace plagdet::corpus
