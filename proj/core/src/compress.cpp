// Copyright 2026 The qcx Authors
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


#include "qcx/compress.hpp"

#include <zlib.h>

#include "qcx/error.hpp"

namespace qcx {

namespace {

constexpr std::string_view kBestId = "deflate-best";

int level_of(std::string_view id) {
  if (id == kBestId) return 9;
  if (id.size() == 6 && id.substr(0, 5) == "zlib-" && id[5] >= '0' && id[5] <= '9') {
    return id[5] - '0';
  }
  throw Error(ErrorKind::Lookup, "unknown compressor '" + std::string(id) + "'");
}

std::vector<std::uint8_t> deflate_with(std::span<const std::uint8_t> data, int level, int strategy) {
  z_stream zs{};
  if (deflateInit2(&zs, level, Z_DEFLATED, 15, 9, strategy) != Z_OK) {
    throw Error(ErrorKind::Io, "zlib deflateInit2 failed");
  }
  std::vector<std::uint8_t> out(deflateBound(&zs, static_cast<uLong>(data.size())));
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error(ErrorKind::Io, "zlib deflate failed with code " + std::to_string(rc));
  out.resize(zs.total_out);
  return out;
}

// Deflate stored blocks hold at most 65535 bytes and cost 5 bytes each.
constexpr std::size_t kStoredBlockBytes = 65535;

}  // namespace

void validate_compressor(std::string_view id) { level_of(id); }

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data, std::string_view compressor) {
  const int level = level_of(compressor);
  if (compressor != kBestId) return deflate_with(data, level, Z_DEFAULT_STRATEGY);
  // Every strategy writes a plain zlib stream; keep the shortest.
  std::vector<std::uint8_t> best;
  for (int strategy : {Z_DEFAULT_STRATEGY, Z_FILTERED, Z_HUFFMAN_ONLY, Z_RLE}) {
    auto out = deflate_with(data, level, strategy);
    if (best.empty() || out.size() < best.size()) best = std::move(out);
  }
  return best;
}

std::size_t compressed_bits(std::span<const std::uint8_t> data, std::string_view compressor) {
  return 8 * compress(data, compressor).size();
}

std::size_t header_constant_bits(std::string_view compressor) {
  return compressed_bits({}, compressor);
}

std::size_t expansion_allowance_bits(std::size_t input_bits) {
  const std::size_t bytes = (input_bits + 7) / 8;
  const std::size_t blocks = bytes == 0 ? 1 : (bytes + kStoredBlockBytes - 1) / kStoredBlockBytes;
  // Stored framing: 5 bytes per block and a 6-byte zlib wrapper, against the
  // 8-byte empty stream; plus up to 7 bits of byte padding.
  return 8 * (5 * blocks + 6 - 8) + 7;
}

}  // namespace qcx
