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


/**
 * @file
 * Lossless compressors used as computable stand-ins for classical
 * complexity. "zlib-<level>" (level 0..9) is zlib's default strategy;
 * "deflate-best" runs level 9 with each zlib strategy (default, filtered,
 * Huffman-only, RLE) and keeps the shortest stream. All outputs are plain
 * zlib streams.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcx {

inline constexpr std::string_view kDefaultCompressor = "deflate-best";

/// Throws Lookup for an unknown compressor id.
void validate_compressor(std::string_view id);

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data,
                                   std::string_view compressor = kDefaultCompressor);

/// 8 * compressed byte length.
std::size_t compressed_bits(std::span<const std::uint8_t> data,
                            std::string_view compressor = kDefaultCompressor);

/// Compressed size of the empty input, in bits. Reported next to estimates,
/// never subtracted from them.
std::size_t header_constant_bits(std::string_view compressor = kDefaultCompressor);

/// Largest amount by which compressed_bits may exceed the input size in
/// bits, beyond the header constant: byte rounding plus per-block framing of
/// stored (incompressible) data.
std::size_t expansion_allowance_bits(std::size_t input_bits);

}  // namespace qcx
