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

#include "topostab/bit_vector.h"

#include <stdexcept>

namespace topostab {

namespace {

void require_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "bit vector length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

}  // namespace

BitVector BitVector::from_indices(size_t num_bits, std::span<const size_t> ones) {
    BitVector result(num_bits);
    for (size_t k : ones) {
        if (k >= num_bits) {
            throw std::out_of_range("bit index " + std::to_string(k) + " out of range for length " + std::to_string(num_bits));
        }
        result.set(k, true);
    }
    return result;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            result.set(k, true);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return result;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector result = *this;
    result ^= other;
    return result;
}

BitVector BitVector::operator|(const BitVector &other) const {
    BitVector result = *this;
    result |= other;
    return result;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector result = *this;
    result &= other;
    return result;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVector::dot(const BitVector &other) const {
    require_same_size(*this, other);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

size_t BitVector::first_one() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * WORD_BITS + std::countr_zero(words_[w]);
        }
    }
    return num_bits_;
}

std::vector<size_t> BitVector::ones() const {
    std::vector<size_t> result;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t bits = words_[w];
        while (bits) {
            result.push_back(w * WORD_BITS + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return result;
}

std::string BitVector::str() const {
    std::string result(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            result[k] = '1';
        }
    }
    return result;
}

bool BitVector::lex_less(const BitVector &other) const {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t diff = words_[w] ^ other.words_[w];
        if (diff) {
            // Lowest differing bit decides; whoever holds the one there is larger.
            return (other.words_[w] >> std::countr_zero(diff)) & 1;
        }
    }
    return false;
}

bool BitVector::padding_is_clear() const {
    size_t tail = num_bits_ % WORD_BITS;
    if (tail == 0 || words_.empty()) {
        return true;
    }
    return (words_.back() >> tail) == 0;
}

}  // namespace topostab
