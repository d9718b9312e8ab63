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

#include <string>

#include "plagdet/common/binary_io.h"
#include "plagdet/common/error.h"
#include "plagdet/vecindex/ivf_index.h"

namespace plagdet::vecindex {
namespace {

constexpr std::string_view kMagic = "SSIX";
// Guards against absurd allocations from a damaged header.
constexpr std::uint64_t kMaxElements = 1ull << 34;

void check_size(std::uint64_t n, std::size_t remaining, std::size_t unit) {
  if (n > kMaxElements || n * unit > remaining) {
    throw Error(ErrorCode::kCorruptFile, "declared size exceeds file length");
  }
}

}  // namespace

std::vector<unsigned char> serialize_index(const IvfPqIndex& index) {
  BinaryWriter w;
  w.magic(kMagic);
  w.u32(kIndexFormatVersion);
  w.u8(static_cast<std::uint8_t>(index.metric()));
  w.u32(static_cast<std::uint32_t>(index.dim()));
  w.u32(static_cast<std::uint32_t>(index.nlist()));
  w.u8(index.has_pq() ? 1 : 0);
  if (index.has_pq()) {
    const PqCodebook& cb = *index.pq();
    w.u32(static_cast<std::uint32_t>(cb.m));
    w.u32(static_cast<std::uint32_t>(cb.dsub));
    w.u32(static_cast<std::uint32_t>(cb.ks));
    w.f32_array(cb.centroids);
  }
  w.f32_array(index.coarse().centroids);
  const std::size_t code_len = index.has_pq() ? index.pq()->m : 0;
  for (const auto& list : index.lists()) {
    w.u64(list.ids.size());
    for (std::size_t i = 0; i < list.ids.size(); ++i) {
      w.u64(list.ids[i]);
      if (index.has_pq()) {
        w.bytes(std::span(list.codes).subspan(i * code_len, code_len));
      } else {
        w.f32_array(std::span(list.vectors).subspan(i * index.dim(), index.dim()));
      }
    }
  }
  w.seal();
  return w.buffer();
}

IvfPqIndex deserialize_index(std::span<const unsigned char> bytes) {
  if (bytes.size() < kMagic.size() ||
      std::string_view(reinterpret_cast<const char*>(bytes.data()), kMagic.size()) != kMagic) {
    throw Error(ErrorCode::kCorruptFile, "not an index file (bad magic)");
  }
  BinaryReader r = BinaryReader::open_sealed(bytes);
  r.expect_magic(kMagic);
  const std::uint32_t version = r.u32();
  if (version != kIndexFormatVersion) {
    throw Error(ErrorCode::kCorruptFile, "unsupported index version " + std::to_string(version));
  }
  const std::uint8_t metric_raw = r.u8();
  if (metric_raw > 1) throw Error(ErrorCode::kCorruptFile, "unknown metric tag");
  const Metric metric = static_cast<Metric>(metric_raw);
  const std::size_t dim = r.u32();
  const std::size_t nlist = r.u32();
  const std::uint8_t pq_flag = r.u8();
  if (dim == 0 || nlist == 0 || pq_flag > 1) {
    throw Error(ErrorCode::kCorruptFile, "invalid index header");
  }

  std::optional<PqCodebook> codebook;
  if (pq_flag == 1) {
    PqCodebook cb;
    cb.m = r.u32();
    cb.dsub = r.u32();
    cb.ks = r.u32();
    if (cb.m == 0 || cb.dsub == 0 || cb.m * cb.dsub != dim || cb.ks == 0 || cb.ks > 256) {
      throw Error(ErrorCode::kCorruptFile, "inconsistent product quantizer shape");
    }
    check_size(std::uint64_t(cb.m) * cb.ks * cb.dsub, r.remaining(), sizeof(float));
    cb.centroids.resize(cb.m * cb.ks * cb.dsub);
    r.f32_array(cb.centroids);
    codebook = std::move(cb);
  }

  CoarseQuantizer coarse;
  coarse.nlist = nlist;
  coarse.dim = dim;
  check_size(std::uint64_t(nlist) * dim, r.remaining(), sizeof(float));
  coarse.centroids.resize(nlist * dim);
  r.f32_array(coarse.centroids);

  IvfPqIndex index(std::move(coarse), codebook, metric);
  const std::size_t entry = sizeof(std::uint64_t) + (codebook ? codebook->m : dim * sizeof(float));
  // Lists are restored verbatim rather than re-added through the quantizer.
  std::vector<IvfPqIndex::InvertedList> lists(nlist);
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t c = 0; c < nlist; ++c) {
    const std::uint64_t len = r.u64();
    check_size(len, r.remaining(), entry);
    auto& list = lists[c];
    list.ids.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) {
      const std::uint64_t id = r.u64();
      if (!seen.insert(id).second) {
        throw Error(ErrorCode::kCorruptFile, "duplicate id " + std::to_string(id));
      }
      list.ids.push_back(id);
      if (codebook) {
        const auto code = r.bytes(codebook->m);
        for (std::uint8_t b : code) {
          if (b >= codebook->ks) throw Error(ErrorCode::kCorruptFile, "code out of range");
        }
        list.codes.insert(list.codes.end(), code.begin(), code.end());
      } else {
        const std::size_t old = list.vectors.size();
        list.vectors.resize(old + dim);
        r.f32_array(std::span(list.vectors).subspan(old, dim));
      }
    }
  }
  if (!r.at_end()) throw Error(ErrorCode::kCorruptFile, "trailing bytes after inverted lists");
  index.restore_lists(std::move(lists));
  return index;
}

void index_save(const IvfPqIndex& index, const std::filesystem::path& path) {
  write_file_bytes(path, serialize_index(index));
}

IvfPqIndex index_load(const std::filesystem::path& path) {
  return deserialize_index(read_file_bytes(path));
}

}  // namespace plagdet::vecindex
