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

#ifndef PLAGDET_COMMON_BINARY_IO_H_
#define PLAGDET_COMMON_BINARY_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace plagdet {

// Little-endian encoder for the index and parameter containers.
class BinaryWriter {
 public:
  void bytes(std::span<const unsigned char> data);
  void magic(std::string_view tag);
  void u8(std::uint8_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f32(float v);
  void f32_array(std::span<const float> values);

  // Appends the CRC-32 of everything written so far.
  void seal();

  const std::vector<unsigned char>& buffer() const { return buf_; }

 private:
  std::vector<unsigned char> buf_;
};

// Bounds-checked decoder. Any short read or malformed field throws
// Error(kCorruptFile).
class BinaryReader {
 public:
  explicit BinaryReader(std::span<const unsigned char> data) : data_(data) {}

  // Verifies and strips the trailing CRC-32. Returns a reader over the body.
  static BinaryReader open_sealed(std::span<const unsigned char> data);

  void expect_magic(std::string_view tag);
  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  float f32();
  void f32_array(std::span<float> out);
  std::span<const unsigned char> bytes(std::size_t n);

  std::size_t remaining() const { return data_.size() - pos_; }
  bool at_end() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const;

  std::span<const unsigned char> data_;
  std::size_t pos_ = 0;
};

std::vector<unsigned char> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      std::span<const unsigned char> data);

}  // namespace plagdet

#endif  // PLAGDET_COMMON_BINARY_IO_H_
