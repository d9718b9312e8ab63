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

#include <gtest/gtest.h>

#include <set>

#include "plagdet/common/binary_io.h"
#include "plagdet/common/error.h"
#include "plagdet/common/hashing.h"
#include "plagdet/common/rng.h"
#include "test_support.h"

namespace plagdet {
namespace {

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, UniformInUnitInterval) {
  Rng r(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng r(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.below(7);
    EXPECT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(Rng, NormalMoments) {
  Rng r(9);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = r.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(Rng, ShuffleIsPermutation) {
  Rng r(5);
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  r.shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(DeriveSeed, DistinctSaltsGiveDistinctSeeds) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(7, s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  EXPECT_NE(derive_seed(7, 3), derive_seed(8, 3));
}

TEST(Crc32, KnownCheckValue) {
  const std::string s = "123456789";
  const std::vector<unsigned char> bytes(s.begin(), s.end());
  EXPECT_EQ(crc32(bytes), 0xCBF43926u);
}

TEST(BinaryIo, RoundTrip) {
  BinaryWriter w;
  w.magic("TEST");
  w.u8(7);
  w.u32(123456);
  w.u64(1ull << 40);
  w.f32(1.5f);
  const std::vector<float> arr{1.f, -2.f, 3.25f};
  w.f32_array(arr);
  w.seal();

  auto r = BinaryReader::open_sealed(w.buffer());
  r.expect_magic("TEST");
  EXPECT_EQ(r.u8(), 7);
  EXPECT_EQ(r.u32(), 123456u);
  EXPECT_EQ(r.u64(), 1ull << 40);
  EXPECT_EQ(r.f32(), 1.5f);
  std::vector<float> out(3);
  r.f32_array(out);
  EXPECT_EQ(out, arr);
  EXPECT_TRUE(r.at_end());
}

TEST(BinaryIo, FlippedByteFailsChecksum) {
  BinaryWriter w;
  w.magic("TEST");
  w.u32(99);
  w.seal();
  auto bytes = w.buffer();
  bytes[5] ^= 0x01;
  EXPECT_ERROR_CODE(BinaryReader::open_sealed(bytes), ErrorCode::kCorruptFile);
}

TEST(BinaryIo, ShortReadIsCorrupt) {
  BinaryWriter w;
  w.u8(1);
  BinaryReader r(w.buffer());
  EXPECT_ERROR_CODE(r.u32(), ErrorCode::kCorruptFile);
}

TEST(BinaryIo, WrongMagicIsCorrupt) {
  BinaryWriter w;
  w.magic("ABCD");
  BinaryReader r(w.buffer());
  EXPECT_ERROR_CODE(r.expect_magic("WXYZ"), ErrorCode::kCorruptFile);
}

TEST(BinaryIo, MissingFileIsIoFailure) {
  testing::TempDir dir;
  EXPECT_ERROR_CODE(read_file_bytes(dir / "absent.bin"), ErrorCode::kIoFailure);
}

TEST(Error, WhatCarriesCodeName) {
  const Error e(ErrorCode::kEmptyIndex, "nothing stored");
  EXPECT_EQ(std::string(e.what()), "EmptyIndex: nothing stored");
  EXPECT_EQ(error_code_name(ErrorCode::kCorruptFile), "CorruptFile");
}

}  // namespace
}  // namespace plagdet
