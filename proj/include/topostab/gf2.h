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

#ifndef TOPOSTAB_GF2_H
#define TOPOSTAB_GF2_H

#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "topostab/bit_vector.h"
#include "topostab/pauli.h"

namespace topostab {

/// Dense row-major matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);
    /// All rows must have length num_cols.
    BitMatrix(size_t num_cols, std::vector<BitVector> rows);

    static BitMatrix identity(size_t n);
    /// One '0'/'1' string per row.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    std::span<const BitVector> rows() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value) {
        rows_[r].set(c, value);
    }

    void append_row(BitVector row);

    /// this * v, one parity bit per row.
    BitVector multiply(const BitVector &v) const;
    BitMatrix transposed() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Reduced row echelon form of a matrix, kept for repeated membership tests.
///
/// Pivots are chosen column by column from the left, taking the topmost
/// remaining row with a one.
class RowEchelon {
   public:
    explicit RowEchelon(const BitMatrix &m);

    size_t rank() const {
        return basis_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    std::span<const BitVector> basis() const {
        return basis_;
    }
    std::span<const size_t> pivots() const {
        return pivots_;
    }

    /// Clears every pivot position of v using the basis rows.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const;

    /// Basis of {v : m v = 0}, one vector per non-pivot column.
    std::vector<BitVector> null_space() const;

   private:
    size_t num_cols_;
    std::vector<BitVector> basis_;
    std::vector<size_t> pivots_;
};

size_t rank(const BitMatrix &m);
bool in_rowspace(const BitMatrix &m, const BitVector &v);
std::vector<BitVector> kernel_basis(const BitMatrix &m);

/// Stacks operators as rows of (x|z) symplectic vectors.
BitMatrix symplectic_matrix(std::span<const PauliOperator> ops, size_t num_qubits);

using LogicalPair = std::pair<PauliOperator, PauliOperator>;

/// Symplectic Gram-Schmidt over the centralizer modulo the stabilizer.
///
/// `candidates` must commute with every row of `stabilizer` (given in
/// (x|z) form with 2n columns) and span the centralizer modulo its
/// rowspace. Returns n - rank(stabilizer) pairs (a_i, b_i) with a_i and
/// b_j anticommuting exactly when i == j, all other pairs commuting, and
/// no element in the stabilizer rowspace. Sweeps take the lowest-index
/// candidate outside the rowspace and its lowest-index anticommuting
/// partner.
std::vector<LogicalPair> symplectic_pairs(std::vector<PauliOperator> candidates, const BitMatrix &stabilizer);

}  // namespace topostab

#endif
