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

#ifndef PLAGDET_CLASSIFIER_PARAMS_IO_H_
#define PLAGDET_CLASSIFIER_PARAMS_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "plagdet/classifier/mlp.h"

namespace plagdet::classifier {

// "SSMP" | version u32 | input u32 | hidden u32 | classes u32 |
// W1, b1, W2, b2 as f32 | CRC-32 of all prior bytes.
inline constexpr std::uint32_t kParamsFormatVersion = 1;

std::vector<unsigned char> serialize_params(const MlpParams& params);
MlpParams deserialize_params(std::span<const unsigned char> bytes);

void params_save(const MlpParams& params, const std::filesystem::path& path);
MlpParams params_load(const std::filesystem::path& path);

}  // namespace plagdet::classifier

#endif  // PLAGDET_CLASSIFIER_PARAMS_IO_H_
