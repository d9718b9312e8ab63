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

#include "plagdet/classifier/mlp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "plagdet/common/error.h"
#include "plagdet/common/rng.h"

namespace plagdet::classifier {

std::string_view label_name(PlagiarismLabel label) {
  switch (label) {
    case PlagiarismLabel::kNoPlagiarism: return "No Plagiarism";
    case PlagiarismLabel::kImitationPlagiarism: return "Imitation Plagiarism";
    case PlagiarismLabel::kShufflePlagiarism: return "Shuffle Plagiarism";
  }
  return "Unknown";
}

PlagiarismLabel label_from_index(std::int64_t value) {
  if (value < 0 || value >= static_cast<std::int64_t>(kNumLabels)) {
    throw Error(ErrorCode::kLabelOutOfRange, "label " + std::to_string(value));
  }
  return static_cast<PlagiarismLabel>(value);
}

MlpParams MlpParams::zeros(std::size_t input_dim, std::size_t hidden_dim,
                           std::size_t num_classes) {
  if (input_dim == 0 || input_dim % 2 != 0 || hidden_dim == 0 || num_classes == 0) {
    throw Error(ErrorCode::kShapeMismatch, "invalid MLP shape");
  }
  MlpParams p;
  p.input_dim = input_dim;
  p.hidden_dim = hidden_dim;
  p.num_classes = num_classes;
  p.w1.assign(input_dim * hidden_dim, 0.0);
  p.b1.assign(hidden_dim, 0.0);
  p.w2.assign(hidden_dim * num_classes, 0.0);
  p.b2.assign(num_classes, 0.0);
  return p;
}

MlpParams MlpParams::glorot(std::size_t input_dim, std::size_t hidden_dim,
                            std::size_t num_classes, std::uint64_t seed) {
  MlpParams p = zeros(input_dim, hidden_dim, num_classes);
  Rng rng(seed);
  const double a1 = std::sqrt(6.0 / static_cast<double>(input_dim + hidden_dim));
  for (double& w : p.w1) w = rng.uniform(-a1, a1);
  const double a2 = std::sqrt(6.0 / static_cast<double>(hidden_dim + num_classes));
  for (double& w : p.w2) w = rng.uniform(-a2, a2);
  return p;
}

bool MlpParams::all_finite() const {
  auto finite = [](const std::vector<double>& t) {
    return std::all_of(t.begin(), t.end(), [](double v) { return std::isfinite(v); });
  };
  return finite(w1) && finite(b1) && finite(w2) && finite(b2);
}

void MlpParams::round_to_float() {
  for_each_tensor([](std::vector<double>& t) {
    for (double& v : t) v = static_cast<double>(static_cast<float>(v));
  });
}

void MlpParams::set_zero() {
  for_each_tensor([](std::vector<double>& t) { std::fill(t.begin(), t.end(), 0.0); });
}

std::vector<double> relu(std::span<const double> x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], 0.0);
  return out;
}

std::vector<double> softmax(std::span<const double> z) {
  if (z.empty()) return {};
  const double mx = *std::max_element(z.begin(), z.end());
  std::vector<double> out(z.size());
  double total = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = std::exp(z[i] - mx);
    total += out[i];
  }
  for (double& v : out) v /= total;
  return out;
}

double cross_entropy(std::span<const double> p, std::size_t label) {
  if (label >= p.size()) throw Error(ErrorCode::kLabelOutOfRange, "label outside distribution");
  return -std::log(std::max(p[label], kProbabilityFloor));
}

ForwardCache forward_input(const MlpParams& params, std::span<const double> u) {
  if (u.size() != params.input_dim) {
    throw Error(ErrorCode::kShapeMismatch, "input of length " + std::to_string(u.size()) +
                                               ", expected " +
                                               std::to_string(params.input_dim));
  }
  const std::size_t hd = params.hidden_dim;
  const std::size_t nc = params.num_classes;
  ForwardCache cache;
  cache.input.assign(u.begin(), u.end());
  cache.hidden_pre = params.b1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = u[i];
    // Hash embeddings are sparse; skipping zero rows is exact.
    if (x == 0.0) continue;
    const double* row = params.w1.data() + i * hd;
    double* acc = cache.hidden_pre.data();
    for (std::size_t j = 0; j < hd; ++j) acc[j] += x * row[j];
  }
  cache.hidden = relu(cache.hidden_pre);
  cache.logits = params.b2;
  for (std::size_t j = 0; j < hd; ++j) {
    const double hj = cache.hidden[j];
    if (hj == 0.0) continue;
    const double* row = params.w2.data() + j * nc;
    for (std::size_t c = 0; c < nc; ++c) cache.logits[c] += hj * row[c];
  }
  cache.probs = softmax(cache.logits);
  return cache;
}

ForwardCache forward(const MlpParams& params, std::span<const float> h1,
                     std::span<const float> h2) {
  if (h1.size() != params.embedding_dim() || h2.size() != params.embedding_dim()) {
    throw Error(ErrorCode::kShapeMismatch,
                "pair embeddings must both have dimension " +
                    std::to_string(params.embedding_dim()));
  }
  std::vector<double> u;
  u.reserve(params.input_dim);
  u.insert(u.end(), h1.begin(), h1.end());
  u.insert(u.end(), h2.begin(), h2.end());
  return forward_input(params, u);
}

void accumulate_gradients(const MlpParams& params, const ForwardCache& cache,
                          std::size_t label, double scale, MlpParams& grads) {
  const std::size_t hd = params.hidden_dim;
  const std::size_t nc = params.num_classes;
  if (label >= nc) throw Error(ErrorCode::kLabelOutOfRange, "label outside class range");
  if (cache.input.size() != params.input_dim || cache.hidden.size() != hd ||
      cache.probs.size() != nc || grads.w1.size() != params.w1.size() ||
      grads.w2.size() != params.w2.size()) {
    throw Error(ErrorCode::kShapeMismatch, "cache or gradient buffer does not match params");
  }

  std::vector<double> dlogits(cache.probs);
  dlogits[label] -= 1.0;
  for (double& g : dlogits) g *= scale;

  std::vector<double> dhidden(hd, 0.0);
  for (std::size_t j = 0; j < hd; ++j) {
    const double* w2row = params.w2.data() + j * nc;
    double* g2row = grads.w2.data() + j * nc;
    const double hj = cache.hidden[j];
    double back = 0.0;
    for (std::size_t c = 0; c < nc; ++c) {
      g2row[c] += hj * dlogits[c];
      back += w2row[c] * dlogits[c];
    }
    dhidden[j] = cache.hidden_pre[j] > 0.0 ? back : 0.0;
  }
  for (std::size_t c = 0; c < nc; ++c) grads.b2[c] += dlogits[c];
  for (std::size_t j = 0; j < hd; ++j) grads.b1[j] += dhidden[j];
  for (std::size_t i = 0; i < params.input_dim; ++i) {
    const double x = cache.input[i];
    if (x == 0.0) continue;
    double* g1row = grads.w1.data() + i * hd;
    for (std::size_t j = 0; j < hd; ++j) g1row[j] += x * dhidden[j];
  }
}

MlpParams backward(const MlpParams& params, const ForwardCache& cache, std::size_t label) {
  MlpParams grads = MlpParams::zeros(params.input_dim, params.hidden_dim, params.num_classes);
  accumulate_gradients(params, cache, label, 1.0, grads);
  return grads;
}

std::size_t argmax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

Prediction predict(const MlpParams& params, std::span<const float> h1,
                   std::span<const float> h2) {
  if (params.num_classes != kNumLabels) {
    throw Error(ErrorCode::kShapeMismatch, "classifier must have exactly 3 outputs");
  }
  ForwardCache cache = forward(params, h1, h2);
  Prediction out;
  out.label = static_cast<PlagiarismLabel>(argmax(cache.probs));
  out.probabilities = std::move(cache.probs);
  return out;
}

}  // namespace plagdet::classifier
