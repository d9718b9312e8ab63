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

#ifndef PLAGDET_SERVICE_HTTP_SERVER_H_
#define PLAGDET_SERVICE_HTTP_SERVER_H_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "plagdet/common/error.h"
#include "plagdet/service/engine.h"

namespace httplib {
class Server;
}

namespace plagdet::service {

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Static files of the review console, mounted at /ui when present.
  std::filesystem::path ui_dir = "webui/dist";
};

// 4xx for caller mistakes and state conflicts, 502 for an unreachable remote
// model, 500 otherwise.
int http_status(ErrorCode code);

// JSON API over an Engine:
//   GET  /health              {"status":"ok"}
//   POST /ingest              {"corpus":[{id,doc_id,text}...], "append"?: bool}
//   POST /detect              {"text", "k"?, "nprobe"?} -> detection report
//   GET  /segments/{id}
//   GET  /config
//   POST /train               {"dataset": path} -> {"job_id"}
//   GET  /jobs/{id}
// Failures answer {"error": message, "code": name}. Ingest and training are
// exclusive; a request arriving while one runs gets 409.
class HttpService {
 public:
  HttpService(Engine& engine, ServiceOptions options);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Binds the listening socket and returns the port. Throws kBindFailure.
  int bind();
  // Serves on the calling thread until stop(). bind() must have succeeded.
  void run();
  // bind() plus run() on a background thread.
  int start();
  void stop();
  int port() const { return port_; }

  // Blocks until no training job is queued or running.
  void wait_for_jobs();

 private:
  struct Job {
    std::string id;
    std::string kind;
    std::string status;  // running | succeeded | failed
    std::string error;
    nlohmann::ordered_json result;
  };

  void install_routes();
  nlohmann::ordered_json job_json(const Job& job) const;

  Engine& engine_;
  ServiceOptions options_;
  std::unique_ptr<httplib::Server> server_;
  std::thread server_thread_;
  int port_ = -1;

  std::atomic<bool> busy_{false};
  mutable std::mutex jobs_mu_;
  std::map<std::string, Job> jobs_;
  std::vector<std::thread> workers_;
  std::uint64_t next_job_ = 1;
};

}  // namespace plagdet::service

#endif  // PLAGDET_SERVICE_HTTP_SERVER_H_
