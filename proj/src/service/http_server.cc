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

#include "plagdet/service/http_server.h"

#include <sstream>

#include "httplib.h"
#include "plagdet/corpus/jsonl.h"

namespace plagdet::service {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kJson = "application/json";

void reply(httplib::Response& res, int status, const ordered_json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void reply_error(httplib::Response& res, int status, const std::string& message,
                 std::string_view code) {
  ordered_json body;
  body["error"] = message;
  body["code"] = std::string(code);
  reply(res, status, body);
}

void reply_error(httplib::Response& res, const Error& e) {
  reply_error(res, http_status(e.code()), e.what(), error_code_name(e.code()));
}

json parse_body(const httplib::Request& req) {
  json body;
  try {
    body = json::parse(req.body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("request body is not JSON: ") + e.what());
  }
  if (!body.is_object()) throw Error(ErrorCode::kInvalidArgument, "request body must be an object");
  return body;
}

void allow_only(const json& body, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, _] : body.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) throw Error(ErrorCode::kInvalidArgument, "unknown field '" + key + "'");
  }
}

std::size_t positive_field(const json& body, const char* name) {
  const json& v = body.at(name);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must be a positive integer");
  }
  return v.get<std::size_t>();
}

// Runs a handler and turns exceptions into JSON error replies.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      reply_error(res, e);
    } catch (const json::exception& e) {
      reply_error(res, 400, e.what(), error_code_name(ErrorCode::kInvalidArgument));
    } catch (const std::exception& e) {
      reply_error(res, 500, e.what(), "Internal");
    }
  };
}

constexpr const char* kUiPlaceholder =
    "<!doctype html><html><head><meta charset=\"utf-8\"><title>plagdet</title></head>"
    "<body><h1>plagdet</h1><p>The review console is not built. Build it into the "
    "configured ui directory, or use the JSON API directly.</p></body></html>";

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kConflict:
    case ErrorCode::kEmptyIndex:
    case ErrorCode::kModelMissing:
      return 409;
    case ErrorCode::kRemoteUnavailable:
    case ErrorCode::kPartialResponse:
      return 502;
    case ErrorCode::kIoFailure:
    case ErrorCode::kBindFailure:
      return 500;
    default:
      return 400;
  }
}

HttpService::HttpService(Engine& engine, ServiceOptions options)
    : engine_(engine), options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  // httplib defaults to SO_REUSEPORT, which lets a second instance share the port silently.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  install_routes();
}

HttpService::~HttpService() {
  stop();
  wait_for_jobs();
}

void HttpService::wait_for_jobs() {
  std::vector<std::thread> workers;
  {
    std::lock_guard lock(jobs_mu_);
    workers.swap(workers_);
  }
  for (auto& t : workers) {
    if (t.joinable()) t.join();
  }
}

ordered_json HttpService::job_json(const Job& job) const {
  ordered_json j;
  j["id"] = job.id;
  j["kind"] = job.kind;
  j["status"] = job.status;
  if (!job.error.empty()) j["error"] = job.error;
  if (!job.result.is_null()) j["result"] = job.result;
  return j;
}

void HttpService::install_routes() {
  auto& s = *server_;

  s.Get("/health", guarded([](const httplib::Request&, httplib::Response& res) {
    reply(res, 200, ordered_json{{"status", "ok"}});
  }));

  s.Get("/config", guarded([this](const httplib::Request&, httplib::Response& res) {
    ordered_json body = config_to_json(engine_.config());
    body["state"] = {{"segments", engine_.segment_count()}, {"model_loaded", engine_.has_model()}};
    reply(res, 200, body);
  }));

  s.Get(R"(/segments/(\d+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
    std::uint64_t id = 0;
    try {
      id = std::stoull(req.matches[1].str());
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "segment id out of range");
    }
    const auto seg = engine_.segment(id);
    if (!seg) throw Error(ErrorCode::kNotFound, "no segment with id " + std::to_string(id));
    ordered_json body = corpus::segment_to_json(*seg);
    body["token_count"] = seg->token_count;
    reply(res, 200, body);
  }));

  s.Post("/detect", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    allow_only(body, {"text", "k", "nprobe"});
    if (!body.contains("text") || !body.at("text").is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "text must be a string");
    }
    std::optional<std::size_t> k, nprobe;
    if (body.contains("k")) k = positive_field(body, "k");
    if (body.contains("nprobe")) nprobe = positive_field(body, "nprobe");
    const DetectionReport report = engine_.detect(body.at("text").get<std::string>(), k, nprobe);
    reply(res, 200, report_to_json(report));
  }));

  s.Post("/ingest", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    allow_only(body, {"corpus", "append"});
    if (!body.contains("corpus") || !body.at("corpus").is_array()) {
      throw Error(ErrorCode::kInvalidArgument, "corpus must be an array of segments");
    }
    bool append = false;
    if (body.contains("append")) {
      if (!body.at("append").is_boolean()) throw Error(ErrorCode::kInvalidArgument, "append must be a boolean");
      append = body.at("append").get<bool>();
    }
    std::vector<corpus::Segment> segments;
    std::size_t i = 0;
    for (const auto& item : body.at("corpus")) {
      try {
        segments.push_back(corpus::segment_from_json(item));
      } catch (const Error& e) {
        throw Error(ErrorCode::kInvalidArgument,
                    "corpus[" + std::to_string(i) + "]: " + e.what());
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kInvalidArgument,
                    "corpus[" + std::to_string(i) + "]: " + e.what());
      }
      ++i;
    }
    bool expected = false;
    if (!busy_.compare_exchange_strong(expected, true)) {
      throw Error(ErrorCode::kConflict, "another ingest or training job is running");
    }
    std::size_t n = 0;
    try {
      n = engine_.ingest(std::move(segments), append);
    } catch (...) {
      busy_ = false;
      throw;
    }
    busy_ = false;
    reply(res, 200, ordered_json{{"segments", n}, {"append", append}});
  }));

  s.Post("/train", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    allow_only(body, {"dataset"});
    if (!body.contains("dataset") || !body.at("dataset").is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "dataset must be a path string");
    }
    const std::string path = body.at("dataset").get<std::string>();
    bool expected = false;
    if (!busy_.compare_exchange_strong(expected, true)) {
      throw Error(ErrorCode::kConflict, "another ingest or training job is running");
    }
    std::string id;
    {
      std::lock_guard lock(jobs_mu_);
      id = "job-" + std::to_string(next_job_++);
      jobs_[id] = Job{id, "train", "running", "", nullptr};
      workers_.emplace_back([this, id, path] {
        Job done{id, "train", "succeeded", "", nullptr};
        try {
          const auto pairs = corpus::read_pairs(path);
          std::ostringstream log;
          const auto result = engine_.train(pairs, &log);
          ordered_json history = ordered_json::array();
          for (const auto& e : result.history) {
            history.push_back({{"epoch", e.epoch}, {"loss", e.mean_loss}, {"accuracy", e.accuracy}});
          }
          done.result = {{"pairs", pairs.size()}, {"history", history}};
        } catch (const std::exception& e) {
          done.status = "failed";
          done.error = e.what();
        }
        {
          std::lock_guard lock(jobs_mu_);
          jobs_[id] = std::move(done);
        }
        busy_ = false;
      });
    }
    reply(res, 202, ordered_json{{"job_id", id}});
  }));

  s.Get(R"(/jobs/([A-Za-z0-9\-]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
    std::lock_guard lock(jobs_mu_);
    const auto it = jobs_.find(req.matches[1].str());
    if (it == jobs_.end()) throw Error(ErrorCode::kNotFound, "no job " + req.matches[1].str());
    reply(res, 200, job_json(it->second));
  }));

  std::error_code ec;
  if (std::filesystem::is_directory(options_.ui_dir, ec)) {
    s.set_mount_point("/ui", options_.ui_dir.string());
  } else {
    s.Get("/ui", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kUiPlaceholder, "text/html; charset=utf-8");
    });
  }
  s.Get("/", [](const httplib::Request&, httplib::Response& res) { res.set_redirect("/ui/"); });

  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      reply_error(res, res.status, "HTTP " + std::to_string(res.status), "Http");
    }
  });
}

int HttpService::bind() {
  if (options_.port == 0) {
    port_ = server_->bind_to_any_port(options_.host);
  } else {
    port_ = server_->bind_to_port(options_.host, options_.port) ? options_.port : -1;
  }
  if (port_ < 0) {
    throw Error(ErrorCode::kBindFailure,
                "cannot bind " + options_.host + ":" + std::to_string(options_.port));
  }
  return port_;
}

void HttpService::run() { server_->listen_after_bind(); }

int HttpService::start() {
  const int p = bind();
  server_thread_ = std::thread([this] { run(); });
  server_->wait_until_ready();
  return p;
}

void HttpService::stop() {
  if (server_) server_->stop();
  if (server_thread_.joinable()) server_thread_.join();
}

}  // namespace plagdet::service
