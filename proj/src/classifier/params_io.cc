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

#include "plagdet/classifier/params_io.h"

#include <cmath>
#include <string>
#include <string_view>

#include "plagdet/common/binary_io.h"
#include "plagdet/common/error.h"

namespace plagdet::classifier {
namespace {

constexpr std::string_view kMagic = "SSMP";

void write_tensor(BinaryWriter& w, const std::vector<double>& t) {
  for (double v : t) w.f32(static_cast<float>(v));
}

void read_tensor(BinaryReader& r, std::vector<double>& t) {
  if (t.size() * sizeof(float) > r.remaining()) {
    throw Error(ErrorCode::kCorruptFile, "parameter payload truncated");
  }
  for (double& v : t) {
    v = r.f32();
    if (!std::isfinite(v)) throw Error(ErrorCode::kCorruptFile, "non-finite parameter");
  }
}

}  // namespace

std::vector<unsigned char> serialize_params(const MlpParams& params) {
  BinaryWriter w;
  w.magic(kMagic);
  w.u32(kParamsFormatVersion);
  w.u32(static_cast<std::uint32_t>(params.input_dim));
  w.u32(static_cast<std::uint32_t>(params.hidden_dim));
  w.u32(static_cast<std::uint32_t>(params.num_classes));
  write_tensor(w, params.w1);
  write_tensor(w, params.b1);
  write_tensor(w, params.w2);
  write_tensor(w, params.b2);
  w.seal();
  return w.buffer();
}

MlpParams deserialize_params(std::span<const unsigned char> bytes) {
  if (bytes.size() < kMagic.size() ||
      std::string_view(reinterpret_cast<const char*>(bytes.data()), kMagic.size()) != kMagic) {
    throw Error(ErrorCode::kCorruptFile, "not a parameter file (bad magic)");
  }
  BinaryReader r = BinaryReader::open_sealed(bytes);
  r.expect_magic(kMagic);
  const std::uint32_t version = r.u32();
  if (version != kParamsFormatVersion) {
    throw Error(ErrorCode::kCorruptFile, "unsupported parameter version " +
                                             std::to_string(version));
  }
  const std::size_t input = r.u32();
  const std::size_t hidden = r.u32();
  const std::size_t classes = r.u32();
  const std::uint64_t expected =
      (std::uint64_t(input) * hidden + hidden + std::uint64_t(hidden) * classes + classes) *
      sizeof(float);
  if (input == 0 || input % 2 != 0 || hidden == 0 || classes == 0 || expected != r.remaining()) {
    throw Error(ErrorCode::kCorruptFile, "parameter shapes do not match payload");
  }
  MlpParams p = MlpParams::zeros(input, hidden, classes);
  read_tensor(r, p.w1);
  read_tensor(r, p.b1);
  read_tensor(r, p.w2);
  read_tensor(r, p.b2);
  return p;
}

void params_save(const MlpParams& params, const std::filesystem::path& path) {
  write_file_bytes(path, serialize_params(params));
}

MlpParams params_load(const std::filesystem::path& path) {
  return deserialize_params(read_file_bytes(path));
}

}  // namespace plagdet::classifier
