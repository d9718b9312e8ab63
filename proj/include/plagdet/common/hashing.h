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

#ifndef PLAGDET_COMMON_HASHING_H_
#define PLAGDET_COMMON_HASHING_H_

#include <cstdint>
#include <span>
#include <string_view>

namespace plagdet {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a over the bytes, then mixed with the seed. Stable across platforms.
std::uint64_t hash_string(std::string_view text, std::uint64_t seed);

// CRC-32 (IEEE) of a byte range, as used by the binary file trailers.
std::uint32_t crc32(std::span<const unsigned char> bytes);

}  // namespace plagdet

#endif  // PLAGDET_COMMON_HASHING_H_
