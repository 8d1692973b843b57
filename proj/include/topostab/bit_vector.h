// Copyright 2026 The topostab Authors
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

#ifndef TOPOSTAB_BIT_VECTOR_H
#define TOPOSTAB_BIT_VECTOR_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace topostab {

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits beyond size() in the last word are always zero.
class BitVector {
   public:
    static constexpr size_t WORD_BITS = 64;

    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_(num_words_for(num_bits), 0) {
    }

    static size_t num_words_for(size_t num_bits) {
        return (num_bits + WORD_BITS - 1) / WORD_BITS;
    }

    /// Builds a vector with ones at the given positions.
    static BitVector from_indices(size_t num_bits, std::span<const size_t> ones);

    /// Parses a string of '0'/'1' characters, bit 0 leftmost.
    static BitVector from_string(std::string_view bits);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }

    bool get(size_t k) const {
        return (words_[k / WORD_BITS] >> (k % WORD_BITS)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k % WORD_BITS);
        if (value) {
            words_[k / WORD_BITS] |= mask;
        } else {
            words_[k / WORD_BITS] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k / WORD_BITS] ^= uint64_t{1} << (k % WORD_BITS);
    }

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator|(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }

    /// Parity of the dot product <*this, other> over GF(2).
    bool dot(const BitVector &other) const;

    /// Index of the lowest set bit, or size() if none.
    size_t first_one() const;

    std::vector<size_t> ones() const;

    /// Bit 0 leftmost, e.g. "0110".
    std::string str() const;

    /// Lexicographic order on bit positions (bit 0 most significant).
    bool lex_less(const BitVector &other) const;

    /// True when all padding bits past size() are zero.
    bool padding_is_clear() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace topostab

#endif
