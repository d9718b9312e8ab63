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

// Command-line front end. Every command that needs an engine reads its
// settings from --config (defaults otherwise); stateful commands keep the
// engine in a directory given by --state.

#include <algorithm>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plagdet/classifier/params_io.h"
#include "plagdet/common/binary_io.h"
#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"
#include "plagdet/corpus/generators.h"
#include "plagdet/corpus/jsonl.h"
#include "plagdet/corpus/paraphraser.h"
#include "plagdet/corpus/segmenter.h"
#include "plagdet/corpus/synthetic.h"
#include "plagdet/metrics/evaluation.h"
#include "plagdet/service/config.h"
#include "plagdet/service/engine.h"
#include "plagdet/service/http_server.h"
#include "plagdet/vecindex/flat_index.h"
#include "plagdet/vecindex/ivf_index.h"

namespace fs = std::filesystem;
using namespace plagdet;

namespace {

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;

  service::EngineConfig load() const {
    service::EngineConfig c = config.empty() ? service::EngineConfig{} : service::load_config(config);
    if (seed) c.set_seed(*seed);
    c.validate();
    return c;
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--config", common.config, "engine config file (key = value)")->check(CLI::ExistingFile);
  cmd->add_option("--seed", common.seed, "override the engine seed");
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// A text file is one document; a directory contributes every *.txt file in
// name order. The document id is the file stem.
std::vector<corpus::Segment> segment_input(const fs::path& in, std::size_t max_tokens) {
  std::vector<fs::path> files;
  if (fs::is_directory(in)) {
    for (const auto& e : fs::directory_iterator(in)) {
      if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(in);
  }
  std::vector<corpus::Segment> out;
  for (const auto& f : files) {
    auto segs = corpus::segment_document(f.stem().string(), read_text(f), max_tokens, out.size());
    out.insert(out.end(), std::make_move_iterator(segs.begin()), std::make_move_iterator(segs.end()));
  }
  return out;
}

std::unique_ptr<service::Engine> open_engine(const std::string& state, const Common& common) {
  if (!state.empty() && fs::exists(fs::path(state) / "config.toml")) {
    if (!common.config.empty() || common.seed) {
      std::cerr << "note: using the config stored in " << state << "\n";
    }
    return service::Engine::load(state);
  }
  return std::make_unique<service::Engine>(common.load());
}

std::vector<float> embed_rows(const embed::EmbeddingProvider& provider,
                              std::span<const std::string> texts) {
  std::vector<float> rows;
  rows.reserve(texts.size() * provider.dimension());
  for (const auto& v : provider.embed_batch(texts)) rows.insert(rows.end(), v.values.begin(), v.values.end());
  return rows;
}

service::HttpService* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plagdet: text plagiarism detection"};
  app.require_subcommand(1);

  // segment
  std::string seg_in, seg_out;
  std::size_t seg_max_tokens = embed::kDefaultMaxTokens;
  auto* segment = app.add_subcommand("segment", "split documents into a JSONL segment corpus");
  segment->add_option("in", seg_in, "text file or directory of .txt files")->required()->check(CLI::ExistingPath);
  segment->add_option("out", seg_out, "output corpus (JSONL)")->required();
  segment->add_option("--max-tokens", seg_max_tokens, "segment length cap in tokens");

  // gen-corpus
  corpus::SyntheticCorpusConfig gen_cfg;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-corpus", "write a seeded synthetic segment corpus");
  gen->add_option("out", gen_out, "output corpus (JSONL)")->required();
  gen->add_option("--documents", gen_cfg.documents, "number of documents");
  gen->add_option("--paragraphs", gen_cfg.paragraphs_per_document, "paragraphs per document");
  gen->add_option("--topics", gen_cfg.topics, "number of topics");
  gen->add_option("--seed", gen_cfg.seed, "generator seed");

  // synth
  Common c_synth;
  std::string synth_corpus, synth_out, synth_train, synth_test;
  std::optional<std::uint64_t> synth_seed;
  auto* synth = app.add_subcommand("synth", "build a labeled pair dataset from a corpus");
  synth->add_option("corpus", synth_corpus, "segment corpus (JSONL)")->required()->check(CLI::ExistingFile);
  synth->add_option("out", synth_out, "output pairs (JSONL)")->required();
  synth->add_option("--seed", synth_seed, "dataset seed (defaults to the config's)");
  synth->add_option("--train", synth_train, "also write the train split here");
  synth->add_option("--test", synth_test, "also write the test split here");
  synth->add_option("--config", c_synth.config, "engine config file")->check(CLI::ExistingFile);

  // ingest
  Common c_ingest;
  std::string ingest_corpus, ingest_state;
  bool ingest_append = false;
  auto* ingest = app.add_subcommand("ingest", "load a corpus into an engine state directory");
  ingest->add_option("corpus", ingest_corpus, "segment corpus (JSONL)")->required()->check(CLI::ExistingFile);
  ingest->add_option("--state", ingest_state, "engine state directory")->required();
  ingest->add_flag("--append", ingest_append, "keep the segments already stored");
  add_common(ingest, c_ingest);

  // index build | query
  auto* index = app.add_subcommand("index", "build or query a standalone vector index");
  index->require_subcommand(1);
  Common c_ib;
  std::string ib_corpus, ib_out;
  auto* ib = index->add_subcommand("build", "embed a corpus and write its index");
  ib->add_option("corpus", ib_corpus, "segment corpus (JSONL)")->required()->check(CLI::ExistingFile);
  ib->add_option("out", ib_out, "index file")->required();
  add_common(ib, c_ib);
  Common c_iq;
  std::string iq_index, iq_query;
  std::size_t iq_k = 10;
  std::optional<std::size_t> iq_nprobe;
  auto* iq = index->add_subcommand("query", "search an index with the text of a file");
  iq->add_option("index", iq_index, "index file")->required()->check(CLI::ExistingFile);
  iq->add_option("query", iq_query, "query text file")->required()->check(CLI::ExistingFile);
  iq->add_option("-k", iq_k, "number of hits");
  iq->add_option("--nprobe", iq_nprobe, "lists to scan");
  add_common(iq, c_iq);

  // train
  Common c_train;
  std::string train_dataset, train_out, train_state;
  auto* train = app.add_subcommand("train", "train the pair classifier");
  train->add_option("dataset", train_dataset, "labeled pairs (JSONL)")->required()->check(CLI::ExistingFile);
  train->add_option("params-out", train_out, "output parameter file")->required();
  train->add_option("--state", train_state, "also install the model into this state directory");
  add_common(train, c_train);

  // eval classify | retrieve
  auto* eval = app.add_subcommand("eval", "evaluate the classifier or the retriever");
  eval->require_subcommand(1);
  Common c_ec;
  std::string ec_params, ec_dataset, ec_agg = "weighted";
  auto* ec = eval->add_subcommand("classify", "metrics of a classifier on labeled pairs");
  ec->add_option("params", ec_params, "parameter file")->required()->check(CLI::ExistingFile);
  ec->add_option("dataset", ec_dataset, "labeled pairs (JSONL)")->required()->check(CLI::ExistingFile);
  ec->add_option("--aggregation", ec_agg, "weighted or macro");
  add_common(ec, c_ec);
  Common c_er;
  std::string er_corpus;
  std::vector<std::string> er_strategies;
  std::size_t er_queries = 500, er_k = 10;
  auto* er = eval->add_subcommand("retrieve", "recall of shuffled copies at k per strategy");
  er->add_option("corpus", er_corpus, "segment corpus (JSONL)")->required()->check(CLI::ExistingFile);
  er->add_option("--strategy", er_strategies, "flat, ivf, ivf_pq (default all)");
  er->add_option("--queries", er_queries, "number of shuffled queries");
  er->add_option("-k", er_k, "hits per query");
  add_common(er, c_er);

  // detect
  std::string detect_query, detect_state;
  std::optional<std::size_t> detect_k, detect_nprobe;
  bool detect_timings = false;
  auto* detect = app.add_subcommand("detect", "report candidates and verdicts for a query");
  detect->add_option("query-file", detect_query, "query text file")->required()->check(CLI::ExistingFile);
  detect->add_option("--state", detect_state, "engine state directory")->required()->check(CLI::ExistingDirectory);
  detect->add_option("-k", detect_k, "number of candidates");
  detect->add_option("--nprobe", detect_nprobe, "lists to scan");
  detect->add_flag("--timings", detect_timings, "include stage timings");

  // serve
  Common c_serve;
  std::string serve_bind = "127.0.0.1:8080", serve_state, serve_ui = "webui/dist";
  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  serve->add_option("--bind", serve_bind, "host:port");
  serve->add_option("--state", serve_state, "engine state directory to load");
  serve->add_option("--ui", serve_ui, "static files served under /ui");
  add_common(serve, c_serve);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*segment) {
      const auto segs = segment_input(seg_in, seg_max_tokens);
      corpus::write_corpus(fs::path(seg_out), segs);
      std::cerr << segs.size() << " segments\n";
    } else if (*gen) {
      const auto segs = corpus::generate_corpus(gen_cfg);
      corpus::write_corpus(fs::path(gen_out), segs);
      std::cerr << segs.size() << " segments\n";
    } else if (*synth) {
      auto cfg = c_synth.load();
      const std::uint64_t seed = synth_seed ? *synth_seed : cfg.dataset_seed();
      const auto segs = corpus::read_corpus(synth_corpus);
      const auto paraphraser = corpus::make_paraphraser(cfg.paraphrase_config());
      const auto pairs = corpus::build_dataset(segs, *paraphraser, seed, cfg.dataset.counts);
      corpus::write_pairs(fs::path(synth_out), pairs);
      if (!synth_train.empty() || !synth_test.empty()) {
        const auto [tr, te] = corpus::split_dataset(pairs, cfg.dataset.split_ratio, seed);
        if (!synth_train.empty()) corpus::write_pairs(fs::path(synth_train), tr);
        if (!synth_test.empty()) corpus::write_pairs(fs::path(synth_test), te);
      }
      std::cerr << pairs.size() << " pairs\n";
    } else if (*ingest) {
      auto engine = open_engine(ingest_state, c_ingest);
      const std::size_t n = engine->ingest_file(ingest_corpus, ingest_append);
      engine->save(ingest_state);
      std::cerr << n << " segments stored\n";
    } else if (*ib) {
      service::Engine engine(c_ib.load());
      engine.ingest_file(ib_corpus);
      const auto bytes = engine.index_bytes();
      if (bytes.empty()) throw Error(ErrorCode::kEmptyIndex, "corpus is empty");
      write_file_bytes(ib_out, bytes);
      std::cerr << engine.segment_count() << " vectors indexed\n";
    } else if (*iq) {
      const auto cfg = c_iq.load();
      const auto idx = vecindex::index_load(iq_index);
      const auto provider = embed::make_provider(cfg.provider);
      if (provider->dimension() != idx.dim()) {
        throw Error(ErrorCode::kDimensionMismatch, "index and provider dimensions differ");
      }
      const auto q = provider->embed(read_text(iq_query));
      const std::size_t nprobe = iq_nprobe.value_or(std::min(cfg.index.nprobe, idx.nlist()));
      nlohmann::ordered_json hits = nlohmann::ordered_json::array();
      for (const auto& h : idx.search(q.view(), iq_k, nprobe).hits) {
        hits.push_back({{"id", h.id}, {"score", h.score}});
      }
      print_json({{"k", iq_k}, {"nprobe", nprobe}, {"hits", hits}});
    } else if (*train) {
      std::unique_ptr<service::Engine> engine =
          train_state.empty() ? std::make_unique<service::Engine>(c_train.load())
                              : open_engine(train_state, c_train);
      const auto pairs = corpus::read_pairs(train_dataset);
      const auto result = engine->train(pairs, &std::cerr);
      classifier::params_save(result.params, train_out);
      if (!train_state.empty()) engine->save(train_state);
    } else if (*ec) {
      const auto cfg = c_ec.load();
      const auto params = classifier::params_load(ec_params);
      const auto provider = embed::make_provider(cfg.provider);
      const auto pairs = corpus::read_pairs(ec_dataset);
      const auto data = corpus::embed_pairs(pairs, *provider);
      print_json(metrics::to_json(
          metrics::evaluate_classifier(params, data, metrics::parse_aggregation(ec_agg))));
    } else if (*er) {
      auto cfg = c_er.load();
      if (er_strategies.empty()) er_strategies = {"flat", "ivf", "ivf_pq"};
      const auto segs = corpus::read_corpus(er_corpus);
      if (segs.empty()) throw Error(ErrorCode::kEmptyIndex, "corpus is empty");
      const auto provider = embed::make_provider(cfg.provider);
      const std::size_t dim = provider->dimension();
      std::vector<std::string> texts;
      std::vector<std::uint64_t> ids;
      for (const auto& s : segs) {
        texts.push_back(s.text);
        ids.push_back(s.id);
      }
      const auto base = embed_rows(*provider, texts);

      // Shuffled copies of randomly chosen segments, without replacement.
      std::vector<std::size_t> order(segs.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      Rng rng(derive_seed(cfg.seed, 0x5e7));
      rng.shuffle(std::span<std::size_t>(order));
      order.resize(std::min(er_queries, order.size()));
      std::vector<std::string> qtexts;
      std::vector<std::uint64_t> originals;
      for (std::size_t i : order) {
        qtexts.push_back(corpus::shuffle_plagiarize(segs[i].text, derive_seed(cfg.seed, segs[i].id)));
        originals.push_back(segs[i].id);
      }
      const auto qrows = embed_rows(*provider, qtexts);
      const vecindex::MatrixView qview(qrows, qtexts.size(), dim);
      const vecindex::MatrixView bview(base, segs.size(), dim);

      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& name : er_strategies) {
        const auto strategy = metrics::parse_strategy(name);
        if (strategy == metrics::Strategy::kFlat) {
          vecindex::FlatIndex flat(dim, cfg.index.metric);
          flat.add_batch(bview, ids);
          out.push_back(metrics::to_json(metrics::evaluate_retrieval(flat, qview, originals, er_k)));
        } else {
          cfg.index.strategy = strategy;
          const auto idx = vecindex::IvfPqIndex::build(bview, ids, service::index_build_params(cfg, dim));
          auto r = metrics::evaluate_retrieval(idx, qview, originals, er_k,
                                               std::min(cfg.index.nprobe, idx.nlist()));
          r.strategy = strategy;
          out.push_back(metrics::to_json(r));
        }
      }
      print_json(out);
    } else if (*detect) {
      const auto engine = service::Engine::load(detect_state);
      const auto report = engine->detect(read_text(detect_query), detect_k, detect_nprobe);
      print_json(service::report_to_json(report, detect_timings));
    } else if (*serve) {
      const auto colon = serve_bind.rfind(':');
      if (colon == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "--bind expects host:port");
      service::ServiceOptions opts;
      opts.host = serve_bind.substr(0, colon);
      try {
        opts.port = std::stoi(serve_bind.substr(colon + 1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidArgument, "bad port in --bind");
      }
      opts.ui_dir = serve_ui;
      auto engine = open_engine(serve_state, c_serve);
      service::HttpService http(*engine, opts);
      const int port = http.bind();
      std::cerr << "listening on " << opts.host << ":" << port << "\n";
      g_service = &http;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      http.run();
      g_service = nullptr;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
