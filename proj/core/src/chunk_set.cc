// Copyright 2026 The Ludemic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ludemic/chunk_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ludemic {

int ChunkSet::BitsForValues(std::uint64_t distinct_values) {
  if (distinct_values > (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("too many distinct values for a chunk");
  }
  int required = 0;
  while ((std::uint64_t{1} << required) < distinct_values) ++required;
  return static_cast<int>(std::bit_ceil(static_cast<unsigned>(
      std::max(required, 1))));
}

ChunkSet::ChunkSet(int chunk_bits, int chunk_count) {
  if (chunk_bits <= 0 || chunk_bits > 32 ||
      !std::has_single_bit(static_cast<unsigned>(chunk_bits))) {
    throw std::invalid_argument("chunk width must be a power of two <= 32, got " +
                                std::to_string(chunk_bits));
  }
  if (chunk_count < 0) {
    throw std::invalid_argument("negative chunk count");
  }
  chunk_bits_ = chunk_bits;
  log_bits_ = std::countr_zero(static_cast<unsigned>(chunk_bits));
  chunk_count_ = chunk_count;
  mask_ = (std::uint64_t{1} << chunk_bits) - 1;
  const std::size_t bits =
      static_cast<std::size_t>(chunk_bits) * static_cast<std::size_t>(chunk_count);
  words_.assign((bits + kWordBits - 1) / kWordBits, 0);
}

std::uint32_t ChunkSet::Get(int index) const {
  if (index < 0 || index >= chunk_count_) {
    throw std::out_of_range("chunk index " + std::to_string(index) +
                            " out of range [0, " +
                            std::to_string(chunk_count_) + ")");
  }
  return GetFast(index);
}

void ChunkSet::Set(int index, std::uint32_t value) {
  if (index < 0 || index >= chunk_count_) {
    throw std::out_of_range("chunk index " + std::to_string(index) +
                            " out of range [0, " +
                            std::to_string(chunk_count_) + ")");
  }
  if (value > mask_) {
    throw std::out_of_range("value " + std::to_string(value) +
                            " does not fit in " + std::to_string(chunk_bits_) +
                            " bits");
  }
  SetFast(index, value);
}

void ChunkSet::Clear() { std::fill(words_.begin(), words_.end(), 0); }

}  // namespace ludemic
