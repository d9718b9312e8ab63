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

#ifndef PLAGDET_TESTS_SUPPORT_GRADIENT_CHECK_H_
#define PLAGDET_TESTS_SUPPORT_GRADIENT_CHECK_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "plagdet/classifier/mlp.h"

namespace plagdet::testing {

struct GradientCheck {
  double max_relative_error = 0.0;
  std::size_t components = 0;
};

// Compares backward() against central differences of the cross-entropy loss
// on one seeded tiny network. Pre-activations are kept away from the ReLU kink
// by redrawing the sample when any |pre| < 1e-3, since a finite difference
// straddling the kink measures nothing useful.
inline GradientCheck check_gradients(std::uint64_t seed, double eps = 1e-5) {
  using namespace classifier;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dim_d(2, 5), hid_d(2, 6), lab_d(0, 2);
  std::normal_distribution<double> nd(0.0, 1.0);

  const std::size_t dim = dim_d(gen);
  const std::size_t hidden = hid_d(gen);
  MlpParams p;
  std::vector<float> h1(dim), h2(dim);
  ForwardCache cache;
  for (;;) {
    p = MlpParams::zeros(2 * dim, hidden, kNumLabels);
    p.for_each_tensor([&](std::vector<double>& t) {
      for (double& x : t) x = 0.7 * nd(gen);
    });
    for (auto& x : h1) x = float(nd(gen));
    for (auto& x : h2) x = float(nd(gen));
    cache = forward(p, h1, h2);
    const bool near_kink = std::any_of(cache.hidden_pre.begin(), cache.hidden_pre.end(),
                                       [](double v) { return std::abs(v) < 1e-3; });
    if (!near_kink) break;
  }
  const std::size_t label = static_cast<std::size_t>(lab_d(gen));
  const MlpParams analytic = backward(p, cache, label);

  const auto loss = [&](const MlpParams& q) { return cross_entropy(forward(q, h1, h2).probs, label); };
  GradientCheck out;
  MlpParams probe = p;
  std::vector<std::vector<double>*> tensors{&probe.w1, &probe.b1, &probe.w2, &probe.b2};
  const std::vector<const std::vector<double>*> grads{&analytic.w1, &analytic.b1, &analytic.w2,
                                                      &analytic.b2};
  for (std::size_t t = 0; t < tensors.size(); ++t) {
    for (std::size_t i = 0; i < tensors[t]->size(); ++i) {
      double& x = (*tensors[t])[i];
      const double saved = x;
      x = saved + eps;
      const double up = loss(probe);
      x = saved - eps;
      const double down = loss(probe);
      x = saved;
      const double numeric = (up - down) / (2 * eps);
      const double a = (*grads[t])[i];
      const double scale = std::max({std::abs(a), std::abs(numeric), 1e-6});
      out.max_relative_error = std::max(out.max_relative_error, std::abs(a - numeric) / scale);
      ++out.components;
    }
  }
  return out;
}

}  // namespace plagdet::testing

#endif  // PLAGDET_TESTS_SUPPORT_GRADIENT_CHECK_H_
