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

#ifndef PLAGDET_TESTS_SUPPORT_TEST_SUPPORT_H_
#define PLAGDET_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "plagdet/common/error.h"
#include "plagdet/vecindex/distance.h"

namespace plagdet::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("plagdet-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Gaussian rows, optionally scaled to unit length. Uses the standard library
// generator so fixtures do not depend on the code under test.
inline std::vector<float> random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                        bool normalize = true) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<float> m(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    double norm = 0.0;
    std::vector<double> row(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      row[c] = nd(gen);
      norm += row[c] * row[c];
    }
    const double scale = normalize && norm > 0 ? 1.0 / std::sqrt(norm) : 1.0;
    for (std::size_t c = 0; c < cols; ++c) m[r * cols + c] = static_cast<float>(row[c] * scale);
  }
  return m;
}

struct OracleHit {
  std::uint64_t id;
  long double score;
};

// Brute-force reference: score every row in long double, order by score
// (descending for inner product, ascending for L2) then id.
inline std::vector<OracleHit> linear_scan(const std::vector<float>& data, std::size_t dim,
                                          const std::vector<std::uint64_t>& ids,
                                          const float* query, std::size_t k,
                                          vecindex::Metric metric) {
  std::vector<OracleHit> all;
  all.reserve(ids.size());
  for (std::size_t r = 0; r < ids.size(); ++r) {
    long double s = 0;
    for (std::size_t c = 0; c < dim; ++c) {
      const long double a = data[r * dim + c];
      const long double b = query[c];
      s += metric == vecindex::Metric::kInnerProduct ? a * b : (a - b) * (a - b);
    }
    all.push_back({ids[r], s});
  }
  std::sort(all.begin(), all.end(), [metric](const OracleHit& a, const OracleHit& b) {
    if (a.score != b.score) {
      return metric == vecindex::Metric::kInnerProduct ? a.score > b.score : a.score < b.score;
    }
    return a.id < b.id;
  });
  all.resize(std::min(k, all.size()));
  return all;
}

// Local HTTP server on an ephemeral port, for exercising remote clients.
class StubServer {
 public:
  StubServer() = default;
  ~StubServer() { stop(); }

  httplib::Server& server() { return server_; }

  int start() {
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    return port_;
  }
  void stop() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }
  std::string url(const std::string& path) const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = -1;
};

// A port that had a listener a moment ago and now has none.
inline int closed_port() {
  httplib::Server s;
  return s.bind_to_any_port("127.0.0.1");
}

}  // namespace plagdet::testing

#define EXPECT_ERROR_CODE(statement, expected_code)                    \
  do {                                                                 \
    try {                                                              \
      statement;                                                       \
      ADD_FAILURE() << "expected " #expected_code " from " #statement; \
    } catch (const ::plagdet::Error& e) {                              \
      EXPECT_EQ(e.code(), expected_code) << e.what();                  \
    }                                                                  \
  } while (0)

#endif  // PLAGDET_TESTS_SUPPORT_TEST_SUPPORT_H_
