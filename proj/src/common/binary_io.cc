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

#include "plagdet/common/binary_io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <string>

#include "plagdet/common/error.h"
#include "plagdet/common/hashing.h"

namespace plagdet {

static_assert(std::endian::native == std::endian::little,
              "binary containers assume a little-endian host");

namespace {

template <typename T>
void append_raw(std::vector<unsigned char>& buf, T v) {
  unsigned char raw[sizeof(T)];
  std::memcpy(raw, &v, sizeof(T));
  buf.insert(buf.end(), raw, raw + sizeof(T));
}

}  // namespace

void BinaryWriter::bytes(std::span<const unsigned char> data) {
  buf_.insert(buf_.end(), data.begin(), data.end());
}

void BinaryWriter::magic(std::string_view tag) {
  buf_.insert(buf_.end(), tag.begin(), tag.end());
}

void BinaryWriter::u8(std::uint8_t v) { buf_.push_back(v); }
void BinaryWriter::u32(std::uint32_t v) { append_raw(buf_, v); }
void BinaryWriter::u64(std::uint64_t v) { append_raw(buf_, v); }
void BinaryWriter::f32(float v) { append_raw(buf_, v); }

void BinaryWriter::f32_array(std::span<const float> values) {
  const auto* raw = reinterpret_cast<const unsigned char*>(values.data());
  buf_.insert(buf_.end(), raw, raw + values.size_bytes());
}

void BinaryWriter::seal() { u32(crc32(buf_)); }

BinaryReader BinaryReader::open_sealed(std::span<const unsigned char> data) {
  if (data.size() < 4) throw Error(ErrorCode::kCorruptFile, "file too short");
  const auto body = data.first(data.size() - 4);
  std::uint32_t stored;
  std::memcpy(&stored, data.data() + body.size(), 4);
  if (stored != crc32(body)) {
    throw Error(ErrorCode::kCorruptFile, "checksum mismatch");
  }
  return BinaryReader(body);
}

void BinaryReader::need(std::size_t n) const {
  if (remaining() < n) throw Error(ErrorCode::kCorruptFile, "unexpected end of data");
}

void BinaryReader::expect_magic(std::string_view tag) {
  auto got = bytes(tag.size());
  if (std::memcmp(got.data(), tag.data(), tag.size()) != 0) {
    throw Error(ErrorCode::kCorruptFile, "bad magic, expected " + std::string(tag));
  }
}

std::span<const unsigned char> BinaryReader::bytes(std::size_t n) {
  need(n);
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t BinaryReader::u8() { return bytes(1)[0]; }

std::uint32_t BinaryReader::u32() {
  std::uint32_t v;
  std::memcpy(&v, bytes(4).data(), 4);
  return v;
}

std::uint64_t BinaryReader::u64() {
  std::uint64_t v;
  std::memcpy(&v, bytes(8).data(), 8);
  return v;
}

float BinaryReader::f32() {
  float v;
  std::memcpy(&v, bytes(4).data(), 4);
  return v;
}

void BinaryReader::f32_array(std::span<float> out) {
  auto raw = bytes(out.size_bytes());
  std::memcpy(out.data(), raw.data(), raw.size());
}

std::vector<unsigned char> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "read failed: " + path.string());
  return data;
}

void write_file_bytes(const std::filesystem::path& path,
                      std::span<const unsigned char> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path.string());
}

}  // namespace plagdet
