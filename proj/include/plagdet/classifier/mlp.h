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

#ifndef PLAGDET_CLASSIFIER_MLP_H_
#define PLAGDET_CLASSIFIER_MLP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace plagdet::classifier {

enum class PlagiarismLabel : std::uint8_t {
  kNoPlagiarism = 0,
  kImitationPlagiarism = 1,
  kShufflePlagiarism = 2,
};

inline constexpr std::size_t kNumLabels = 3;
inline constexpr std::size_t kDefaultHidden = 512;

std::string_view label_name(PlagiarismLabel label);
// Throws Error(kLabelOutOfRange) for anything outside 0..2.
PlagiarismLabel label_from_index(std::int64_t value);
inline std::size_t label_index(PlagiarismLabel label) { return static_cast<std::size_t>(label); }

// Two-layer perceptron on the concatenated pair embedding:
//   hidden = relu(u W1 + b1),  p = softmax(hidden W2 + b2),  u = [h1, h2].
// Matrices are row-major with the input on the row axis.
struct MlpParams {
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 0;
  std::size_t num_classes = 0;
  std::vector<double> w1;  // input_dim x hidden_dim
  std::vector<double> b1;  // hidden_dim
  std::vector<double> w2;  // hidden_dim x num_classes
  std::vector<double> b2;  // num_classes

  static MlpParams zeros(std::size_t input_dim, std::size_t hidden_dim, std::size_t num_classes);
  // Glorot-uniform weights in (-a, a), a = sqrt(6 / (fan_in + fan_out)); zero biases.
  static MlpParams glorot(std::size_t input_dim, std::size_t hidden_dim,
                          std::size_t num_classes, std::uint64_t seed);

  std::size_t embedding_dim() const { return input_dim / 2; }
  std::size_t parameter_count() const { return w1.size() + b1.size() + w2.size() + b2.size(); }
  bool all_finite() const;
  // Rounds every parameter to the nearest float, the precision of the stored format.
  void round_to_float();
  void set_zero();

  // Visits the four tensors in storage order (W1, b1, W2, b2).
  template <typename Fn>
  void for_each_tensor(Fn&& fn) {
    fn(w1);
    fn(b1);
    fn(w2);
    fn(b2);
  }

  bool operator==(const MlpParams&) const = default;
};

std::vector<double> relu(std::span<const double> x);
// exp(z_i) / sum_j exp(z_j), evaluated after subtracting max(z).
std::vector<double> softmax(std::span<const double> z);
// -log(p[label]) with p floored at 1e-12.
double cross_entropy(std::span<const double> p, std::size_t label);

inline constexpr double kProbabilityFloor = 1e-12;

struct ForwardCache {
  std::vector<double> input;       // u
  std::vector<double> hidden_pre;  // u W1 + b1
  std::vector<double> hidden;      // relu(hidden_pre)
  std::vector<double> logits;
  std::vector<double> probs;
};

// Throws kShapeMismatch if h1 or h2 does not match embedding_dim().
ForwardCache forward(const MlpParams& params, std::span<const float> h1,
                     std::span<const float> h2);
ForwardCache forward_input(const MlpParams& params, std::span<const double> u);

// Adds scale * d CE / d theta into grads (same shapes as params). The logit
// gradient is p - onehot(label).
void accumulate_gradients(const MlpParams& params, const ForwardCache& cache,
                          std::size_t label, double scale, MlpParams& grads);

MlpParams backward(const MlpParams& params, const ForwardCache& cache, std::size_t label);

struct Prediction {
  PlagiarismLabel label = PlagiarismLabel::kNoPlagiarism;
  std::vector<double> probabilities;
};

// First index of the maximum.
std::size_t argmax(std::span<const double> values);

Prediction predict(const MlpParams& params, std::span<const float> h1,
                   std::span<const float> h2);

}  // namespace plagdet::classifier

#endif  // PLAGDET_CLASSIFIER_MLP_H_
