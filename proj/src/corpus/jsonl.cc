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

#include "plagdet/corpus/jsonl.h"

#include <fstream>
#include <unordered_set>

#include "plagdet/common/error.h"
#include "plagdet/embed/tokenizer.h"

namespace plagdet::corpus {
namespace {

using nlohmann::json;

[[noreturn]] void bad_line(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kCorruptFile, "line " + std::to_string(line) + ": " + why);
}

std::string doc_id_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorCode::kCorruptFile, "doc_id must be a string");
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  return out;
}

template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      bad_line(n, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) bad_line(n, "expected a JSON object");
    try {
      fn(j);
    } catch (const Error& e) {
      std::string msg = e.what();
      const std::string prefix = std::string(error_code_name(e.code())) + ": ";
      if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
      bad_line(n, msg);
    } catch (const json::exception& e) {
      bad_line(n, e.what());
    }
  }
}

}  // namespace

Segment segment_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kCorruptFile, "segment must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "id" && key != "doc_id" && key != "text") {
      throw Error(ErrorCode::kCorruptFile, "unknown segment field '" + key + "'");
    }
  }
  const json& id = j.at("id");
  if (!id.is_number_unsigned() && !(id.is_number_integer() && id.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::kCorruptFile, "id must be a non-negative integer");
  }
  Segment s;
  s.id = id.get<std::uint64_t>();
  s.doc_id = doc_id_of(j.at("doc_id"));
  if (!j.at("text").is_string()) throw Error(ErrorCode::kCorruptFile, "text must be a string");
  s.text = j.at("text").get<std::string>();
  if (s.text.empty()) throw Error(ErrorCode::kCorruptFile, "text is empty");
  s.token_count = embed::count_tokens(s.text);
  return s;
}

nlohmann::ordered_json segment_to_json(const Segment& s) {
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["doc_id"] = s.doc_id;
  j["text"] = s.text;
  return j;
}

std::vector<Segment> parse_corpus(std::istream& in) {
  std::vector<Segment> out;
  std::unordered_set<std::uint64_t> ids;
  for_each_line(in, [&](const json& j) {
    Segment s = segment_from_json(j);
    if (!ids.insert(s.id).second) {
      throw Error(ErrorCode::kCorruptFile, "duplicate segment id " + std::to_string(s.id));
    }
    out.push_back(std::move(s));
  });
  return out;
}

std::vector<Segment> read_corpus(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_corpus(in);
}

void write_corpus(std::ostream& out, std::span<const Segment> segments) {
  for (const auto& s : segments) out << segment_to_json(s).dump() << '\n';
}

void write_corpus(const std::filesystem::path& path, std::span<const Segment> segments) {
  auto out = open_out(path);
  write_corpus(out, segments);
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path.string());
}

std::vector<TextPair> parse_pairs(std::istream& in) {
  std::vector<TextPair> out;
  for_each_line(in, [&](const json& j) {
    TextPair p;
    p.t1 = j.at("t1").get<std::string>();
    p.t2 = j.at("t2").get<std::string>();
    if (p.t1.empty() || p.t2.empty()) throw Error(ErrorCode::kCorruptFile, "t1 and t2 must be nonempty");
    const json& label = j.at("label");
    if (!label.is_number_integer()) throw Error(ErrorCode::kCorruptFile, "label must be an integer");
    const auto v = label.get<std::int64_t>();
    if (v < 0 || v > 2) throw Error(ErrorCode::kCorruptFile, "label must be 0, 1 or 2");
    p.label = classifier::label_from_index(v);
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<TextPair> read_pairs(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_pairs(in);
}

void write_pairs(std::ostream& out, std::span<const TextPair> pairs) {
  for (const auto& p : pairs) {
    nlohmann::ordered_json j;
    j["t1"] = p.t1;
    j["t2"] = p.t2;
    j["label"] = classifier::label_index(p.label);
    out << j.dump() << '\n';
  }
}

void write_pairs(const std::filesystem::path& path, std::span<const TextPair> pairs) {
  auto out = open_out(path);
  write_pairs(out, pairs);
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path.string());
}

}  // namespace plagdet::corpus
