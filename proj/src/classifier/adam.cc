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

#include "plagdet/classifier/adam.h"

#include <cmath>

#include "plagdet/common/error.h"

namespace plagdet::classifier {

void adam_step(std::span<double> params, std::span<const double> grads, AdamMoments& moments,
               std::size_t t, const AdamConfig& config) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "Adam step counter starts at 1");
  if (grads.size() != params.size()) {
    throw Error(ErrorCode::kShapeMismatch, "gradient and parameter sizes differ");
  }
  if (moments.m.size() != params.size()) {
    moments.m.assign(params.size(), 0.0);
    moments.v.assign(params.size(), 0.0);
  }
  const double td = static_cast<double>(t);
  const double c1 = 1.0 - std::pow(config.beta1, td);
  const double c2 = 1.0 - std::pow(config.beta2, td);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    double& m = moments.m[i];
    double& v = moments.v[i];
    m = config.beta1 * m + (1.0 - config.beta1) * g;
    v = config.beta2 * v + (1.0 - config.beta2) * g * g;
    params[i] -= config.learning_rate * (m / c1) / (std::sqrt(v / c2) + config.epsilon);
  }
}

void adam_step(MlpParams& params, const MlpParams& grads, AdamState& state,
               const AdamConfig& config) {
  ++state.step;
  adam_step(params.w1, grads.w1, state.w1, state.step, config);
  adam_step(params.b1, grads.b1, state.b1, state.step, config);
  adam_step(params.w2, grads.w2, state.w2, state.step, config);
  adam_step(params.b2, grads.b2, state.b2, state.step, config);
}

}  // namespace plagdet::classifier
