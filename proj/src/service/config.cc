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

#include "plagdet/service/config.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"
#include "plagdet/corpus/sentences.h"

namespace plagdet::service {
namespace {

[[noreturn]] void bad(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kInvalidArgument, "config line " + std::to_string(line) + ": " + why);
}

std::uint64_t as_u64(std::string_view v, std::size_t line) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) bad(line, "expected an integer, got '" + std::string(v) + "'");
  return out;
}

double as_double(std::string_view v, std::size_t line) {
  std::string s(v);
  char* end = nullptr;
  const double out = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) bad(line, "expected a number, got '" + s + "'");
  return out;
}

bool as_bool(std::string_view v, std::size_t line) {
  if (v == "true") return true;
  if (v == "false") return false;
  bad(line, "expected true or false");
}

std::string unquote(std::string_view v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return std::string(v.substr(1, v.size() - 2));
  return std::string(v);
}

std::string_view strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void EngineConfig::validate() const {
  provider.validate();
  classifier.validate();
  if (index.nlist == 0) throw Error(ErrorCode::kInvalidArgument, "index.nlist must be >= 1");
  if (index.nprobe == 0) throw Error(ErrorCode::kInvalidArgument, "index.nprobe must be >= 1");
  if (index.max_iters == 0) throw Error(ErrorCode::kInvalidArgument, "index.max_iters must be >= 1");
  if (index.strategy == metrics::Strategy::kIvfPq) {
    vecindex::PqParams::from_subvector_dim(provider.dimension, index.dsub, index.ks)
        .validate(provider.dimension);
  }
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "detect.k must be >= 1");
  if (!(dataset.split_ratio > 0.0 && dataset.split_ratio < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dataset.split_ratio must lie in (0, 1)");
  }
  paraphrase_config().validate();
}

void EngineConfig::set_seed(std::uint64_t s) {
  seed = s;
  provider.seed = s;
  classifier.seed = s;
}

std::uint64_t EngineConfig::index_seed() const { return derive_seed(seed, 0x1d3); }
std::uint64_t EngineConfig::classifier_seed() const { return classifier.seed; }
std::uint64_t EngineConfig::dataset_seed() const { return derive_seed(seed, 0xda7a); }

corpus::ParaphraseProviderConfig EngineConfig::paraphrase_config() const {
  return corpus::ParaphraseProviderConfig{dataset.paraphrase, derive_seed(seed, 0x9a4a),
                                          dataset.paraphrase_endpoint};
}

vecindex::IvfBuildParams index_build_params(const EngineConfig& config, std::size_t dim) {
  vecindex::IvfBuildParams p;
  p.metric = config.index.metric;
  p.seed = config.index_seed();
  p.max_iters = config.index.max_iters;
  p.nprobe_default = config.index.nprobe;
  switch (config.index.strategy) {
    case metrics::Strategy::kFlat:
      p.nlist = 1;
      p.nprobe_default = 1;
      break;
    case metrics::Strategy::kIvf:
      p.nlist = config.index.nlist;
      break;
    case metrics::Strategy::kIvfPq:
      p.nlist = config.index.nlist;
      p.pq = vecindex::PqParams::from_subvector_dim(dim, config.index.dsub, config.index.ks);
      break;
  }
  return p;
}

EngineConfig parse_config(std::string_view text) {
  EngineConfig c;
  bool provider_seed_set = false;
  bool classifier_seed_set = false;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    const std::string_view line = corpus::trim(strip_comment(text.substr(pos, nl - pos)));
    pos = nl + 1;
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') bad(line_no, "unterminated section header");
      section = std::string(corpus::trim(line.substr(1, line.size() - 2)));
      if (section != "provider" && section != "index" && section != "classifier" &&
          section != "dataset" && section != "detect") {
        bad(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) bad(line_no, "expected key = value");
    const std::string key(corpus::trim(line.substr(0, eq)));
    const std::string value = unquote(corpus::trim(line.substr(eq + 1)));
    const std::string full = section.empty() ? key : section + "." + key;
    const std::size_t n = line_no;

    if (full == "seed") {
      c.seed = as_u64(value, n);
    } else if (full == "provider.kind") {
      if (value == "hash") c.provider.kind = embed::ProviderKind::kHash;
      else if (value == "remote") c.provider.kind = embed::ProviderKind::kRemote;
      else bad(n, "provider.kind must be hash or remote");
    } else if (full == "provider.dimension") {
      c.provider.dimension = as_u64(value, n);
    } else if (full == "provider.normalize") {
      c.provider.normalize = as_bool(value, n);
    } else if (full == "provider.endpoint") {
      c.provider.endpoint = value;
    } else if (full == "provider.seed") {
      c.provider.seed = as_u64(value, n);
      provider_seed_set = true;
    } else if (full == "provider.max_tokens") {
      c.provider.max_tokens = as_u64(value, n);
    } else if (full == "index.strategy") {
      try {
        c.index.strategy = metrics::parse_strategy(value);
      } catch (const Error&) {
        bad(n, "index.strategy must be flat, ivf or ivf_pq");
      }
    } else if (full == "index.nlist") {
      c.index.nlist = as_u64(value, n);
    } else if (full == "index.nprobe") {
      c.index.nprobe = as_u64(value, n);
    } else if (full == "index.dsub") {
      c.index.dsub = as_u64(value, n);
    } else if (full == "index.ks") {
      c.index.ks = as_u64(value, n);
    } else if (full == "index.metric") {
      try {
        c.index.metric = vecindex::parse_metric(value);
      } catch (const Error&) {
        bad(n, "index.metric must be inner_product or l2");
      }
    } else if (full == "index.max_iters") {
      c.index.max_iters = as_u64(value, n);
    } else if (full == "classifier.hidden") {
      c.classifier.hidden_dim = as_u64(value, n);
    } else if (full == "classifier.learning_rate") {
      c.classifier.learning_rate = as_double(value, n);
    } else if (full == "classifier.batch_size") {
      c.classifier.batch_size = as_u64(value, n);
    } else if (full == "classifier.max_epochs") {
      c.classifier.max_epochs = as_u64(value, n);
    } else if (full == "classifier.adam_beta1") {
      c.classifier.adam_beta1 = as_double(value, n);
    } else if (full == "classifier.adam_beta2") {
      c.classifier.adam_beta2 = as_double(value, n);
    } else if (full == "classifier.adam_eps") {
      c.classifier.adam_eps = as_double(value, n);
    } else if (full == "classifier.seed") {
      c.classifier.seed = as_u64(value, n);
      classifier_seed_set = true;
    } else if (full == "dataset.shuffle") {
      c.dataset.counts.shuffle = as_u64(value, n);
    } else if (full == "dataset.imitation") {
      c.dataset.counts.imitation = as_u64(value, n);
    } else if (full == "dataset.negative") {
      c.dataset.counts.negative = as_u64(value, n);
    } else if (full == "dataset.rewritten_negative") {
      c.dataset.counts.rewritten_negative = as_u64(value, n);
    } else if (full == "dataset.split_ratio") {
      c.dataset.split_ratio = as_double(value, n);
    } else if (full == "dataset.paraphrase") {
      if (value == "rule_stub") c.dataset.paraphrase = corpus::ParaphraseKind::kRuleStub;
      else if (value == "external") c.dataset.paraphrase = corpus::ParaphraseKind::kExternal;
      else bad(n, "dataset.paraphrase must be rule_stub or external");
    } else if (full == "dataset.paraphrase_endpoint") {
      c.dataset.paraphrase_endpoint = value;
    } else if (full == "detect.k") {
      c.k = as_u64(value, n);
    } else {
      bad(n, "unknown key '" + full + "'");
    }
    if (nl == text.size()) break;
  }
  if (!provider_seed_set) c.provider.seed = c.seed;
  if (!classifier_seed_set) c.classifier.seed = c.seed;
  c.validate();
  return c;
}

EngineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const EngineConfig& c) {
  std::ostringstream o;
  o << "seed = " << c.seed << "\n\n[provider]\n"
    << "kind = \"" << (c.provider.kind == embed::ProviderKind::kHash ? "hash" : "remote") << "\"\n"
    << "dimension = " << c.provider.dimension << "\n"
    << "normalize = " << (c.provider.normalize ? "true" : "false") << "\n";
  if (c.provider.endpoint) o << "endpoint = \"" << *c.provider.endpoint << "\"\n";
  o << "seed = " << c.provider.seed << "\n"
    << "max_tokens = " << c.provider.max_tokens << "\n\n[index]\n"
    << "strategy = \"" << metrics::strategy_name(c.index.strategy) << "\"\n"
    << "nlist = " << c.index.nlist << "\n"
    << "nprobe = " << c.index.nprobe << "\n"
    << "dsub = " << c.index.dsub << "\n"
    << "ks = " << c.index.ks << "\n"
    << "metric = \"" << vecindex::metric_name(c.index.metric) << "\"\n"
    << "max_iters = " << c.index.max_iters << "\n\n[classifier]\n"
    << "hidden = " << c.classifier.hidden_dim << "\n"
    << "learning_rate = " << fmt_double(c.classifier.learning_rate) << "\n"
    << "batch_size = " << c.classifier.batch_size << "\n"
    << "max_epochs = " << c.classifier.max_epochs << "\n"
    << "adam_beta1 = " << fmt_double(c.classifier.adam_beta1) << "\n"
    << "adam_beta2 = " << fmt_double(c.classifier.adam_beta2) << "\n"
    << "adam_eps = " << fmt_double(c.classifier.adam_eps) << "\n"
    << "seed = " << c.classifier.seed << "\n\n[dataset]\n"
    << "shuffle = " << c.dataset.counts.shuffle << "\n"
    << "imitation = " << c.dataset.counts.imitation << "\n"
    << "negative = " << c.dataset.counts.negative << "\n"
    << "rewritten_negative = " << c.dataset.counts.rewritten_negative << "\n"
    << "split_ratio = " << fmt_double(c.dataset.split_ratio) << "\n"
    << "paraphrase = \""
    << (c.dataset.paraphrase == corpus::ParaphraseKind::kRuleStub ? "rule_stub" : "external")
    << "\"\n";
  if (c.dataset.paraphrase_endpoint) {
    o << "paraphrase_endpoint = \"" << *c.dataset.paraphrase_endpoint << "\"\n";
  }
  o << "\n[detect]\nk = " << c.k << "\n";
  return o.str();
}

nlohmann::ordered_json config_to_json(const EngineConfig& c) {
  nlohmann::ordered_json j;
  j["seed"] = c.seed;
  j["provider"] = {
      {"kind", c.provider.kind == embed::ProviderKind::kHash ? "hash" : "remote"},
      {"dimension", c.provider.dimension},
      {"normalize", c.provider.normalize},
      {"endpoint", c.provider.endpoint ? nlohmann::ordered_json(*c.provider.endpoint)
                                       : nlohmann::ordered_json(nullptr)},
      {"seed", c.provider.seed},
      {"max_tokens", c.provider.max_tokens}};
  j["index"] = {{"strategy", std::string(metrics::strategy_name(c.index.strategy))},
                {"nlist", c.index.nlist},
                {"nprobe", c.index.nprobe},
                {"dsub", c.index.dsub},
                {"ks", c.index.ks},
                {"metric", std::string(vecindex::metric_name(c.index.metric))},
                {"max_iters", c.index.max_iters}};
  j["classifier"] = {{"hidden", c.classifier.hidden_dim},
                     {"learning_rate", c.classifier.learning_rate},
                     {"batch_size", c.classifier.batch_size},
                     {"max_epochs", c.classifier.max_epochs},
                     {"adam_beta1", c.classifier.adam_beta1},
                     {"adam_beta2", c.classifier.adam_beta2},
                     {"adam_eps", c.classifier.adam_eps},
                     {"seed", c.classifier.seed}};
  j["dataset"] = {{"shuffle", c.dataset.counts.shuffle},
                  {"imitation", c.dataset.counts.imitation},
                  {"negative", c.dataset.counts.negative},
                  {"rewritten_negative", c.dataset.counts.rewritten_negative},
                  {"split_ratio", c.dataset.split_ratio},
                  {"paraphrase", c.dataset.paraphrase == corpus::ParaphraseKind::kRuleStub
                                     ? "rule_stub"
                                     : "external"}};
  j["detect"] = {{"k", c.k}};
  return j;
}

}  // namespace plagdet::service
