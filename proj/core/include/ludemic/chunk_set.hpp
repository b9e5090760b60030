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

#ifndef LUDEMIC_CHUNK_SET_HPP_
#define LUDEMIC_CHUNK_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ludemic {

// A packed array of fixed-width unsigned chunks stored in 64-bit words.
//
// Chunk widths are powers of two no larger than 32, so 64 is always a
// multiple of the width and no chunk ever spans two words.
class ChunkSet {
 public:
  static constexpr int kWordBits = 64;

  // Lowest power of two that is at least ceil(log2(distinct_values)), with a
  // minimum of one bit. Throws std::invalid_argument above 2^32 values.
  static int BitsForValues(std::uint64_t distinct_values);

  ChunkSet() = default;
  // All chunks start at zero. Throws std::invalid_argument for a width that
  // is not one of 1, 2, 4, 8, 16, 32 or for a negative count.
  ChunkSet(int chunk_bits, int chunk_count);

  int chunk_bits() const { return chunk_bits_; }
  int chunk_count() const { return chunk_count_; }
  std::uint32_t max_value() const { return static_cast<std::uint32_t>(mask_); }

  // Checked accessors; std::out_of_range on a bad index or value.
  std::uint32_t Get(int index) const;
  void Set(int index, std::uint32_t value);

  // Unchecked accessors for the playout hot path.
  std::uint32_t GetFast(int index) const {
    const unsigned bit = static_cast<unsigned>(index) << log_bits_;
    return static_cast<std::uint32_t>((words_[bit >> 6] >> (bit & 63)) &
                                      mask_);
  }
  void SetFast(int index, std::uint32_t value) {
    const unsigned bit = static_cast<unsigned>(index) << log_bits_;
    std::uint64_t& word = words_[bit >> 6];
    word = (word & ~(mask_ << (bit & 63))) |
           (static_cast<std::uint64_t>(value) << (bit & 63));
  }

  void Clear();

  std::span<const std::uint64_t> words() const { return words_; }
  // Bits actually allocated: whole words.
  std::size_t storage_bits() const { return words_.size() * kWordBits; }

  friend bool operator==(const ChunkSet& a, const ChunkSet& b) = default;

 private:
  int chunk_bits_ = 1;
  int log_bits_ = 0;
  int chunk_count_ = 0;
  std::uint64_t mask_ = 1;
  std::vector<std::uint64_t> words_;
};

}  // namespace ludemic

#endif  // LUDEMIC_CHUNK_SET_HPP_
