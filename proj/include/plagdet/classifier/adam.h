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

#ifndef PLAGDET_CLASSIFIER_ADAM_H_
#define PLAGDET_CLASSIFIER_ADAM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "plagdet/classifier/mlp.h"

namespace plagdet::classifier {

struct AdamConfig {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// First and second moment estimates for one flat parameter block.
struct AdamMoments {
  std::vector<double> m;
  std::vector<double> v;
};

// One bias-corrected Adam update of params in place; t is the 1-based step.
void adam_step(std::span<double> params, std::span<const double> grads, AdamMoments& moments,
               std::size_t t, const AdamConfig& config);

// Moments for each of the four MLP tensors.
struct AdamState {
  AdamMoments w1, b1, w2, b2;
  std::size_t step = 0;
};

// Advances state.step and applies adam_step to every tensor.
void adam_step(MlpParams& params, const MlpParams& grads, AdamState& state,
               const AdamConfig& config);

}  // namespace plagdet::classifier

#endif  // PLAGDET_CLASSIFIER_ADAM_H_
