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

#include "topostab/gf2.h"

#include <stdexcept>
#include <string>

namespace topostab {

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BitMatrix::BitMatrix(size_t num_cols, std::vector<BitVector> rows) : num_cols_(num_cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != num_cols_) {
            throw std::invalid_argument("matrix row has " + std::to_string(r.size()) + " bits, expected " +
                                        std::to_string(num_cols_));
        }
    }
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        result.set(k, k, true);
    }
    return result;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> parsed;
    for (auto r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    size_t cols = parsed.empty() ? 0 : parsed.front().size();
    return BitMatrix(cols, std::move(parsed));
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != num_cols_) {
        throw std::invalid_argument("appended row has wrong length");
    }
    rows_.push_back(std::move(row));
}

BitVector BitMatrix::multiply(const BitVector &v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    BitVector result(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        result.set(r, rows_[r].dot(v));
    }
    return result;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix result(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c : rows_[r].ones()) {
            result.set(c, r, true);
        }
    }
    return result;
}

RowEchelon::RowEchelon(const BitMatrix &m) : num_cols_(m.num_cols()) {
    std::vector<BitVector> work(m.rows().begin(), m.rows().end());
    size_t top = 0;
    for (size_t col = 0; col < num_cols_ && top < work.size(); col++) {
        size_t found = top;
        while (found < work.size() && !work[found].get(col)) {
            found++;
        }
        if (found == work.size()) {
            continue;
        }
        std::swap(work[top], work[found]);
        for (size_t r = 0; r < work.size(); r++) {
            if (r != top && work[r].get(col)) {
                work[r] ^= work[top];
            }
        }
        pivots_.push_back(col);
        top++;
    }
    work.resize(top);
    basis_ = std::move(work);
}

BitVector RowEchelon::reduce(BitVector v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument("vector has " + std::to_string(v.size()) + " bits, matrix has " +
                                    std::to_string(num_cols_) + " columns");
    }
    for (size_t r = 0; r < basis_.size(); r++) {
        if (v.get(pivots_[r])) {
            v ^= basis_[r];
        }
    }
    return v;
}

bool RowEchelon::contains(const BitVector &v) const {
    return reduce(v).none();
}

std::vector<BitVector> RowEchelon::null_space() const {
    std::vector<bool> is_pivot(num_cols_, false);
    for (size_t p : pivots_) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> result;
    for (size_t free = 0; free < num_cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(num_cols_);
        v.set(free, true);
        for (size_t r = 0; r < basis_.size(); r++) {
            if (basis_[r].get(free)) {
                v.set(pivots_[r], true);
            }
        }
        result.push_back(std::move(v));
    }
    return result;
}

size_t rank(const BitMatrix &m) {
    return RowEchelon(m).rank();
}

bool in_rowspace(const BitMatrix &m, const BitVector &v) {
    return RowEchelon(m).contains(v);
}

std::vector<BitVector> kernel_basis(const BitMatrix &m) {
    return RowEchelon(m).null_space();
}

BitMatrix symplectic_matrix(std::span<const PauliOperator> ops, size_t num_qubits) {
    BitMatrix result(0, 2 * num_qubits);
    for (const auto &op : ops) {
        if (op.num_qubits() != num_qubits) {
            throw std::invalid_argument("operator length does not match qubit count");
        }
        result.append_row(op.symplectic());
    }
    return result;
}

std::vector<LogicalPair> symplectic_pairs(std::vector<PauliOperator> candidates, const BitMatrix &stabilizer) {
    if (stabilizer.num_cols() % 2) {
        throw std::invalid_argument("stabilizer matrix must have 2n columns");
    }
    size_t n = stabilizer.num_cols() / 2;
    std::vector<PauliOperator> stabilizer_ops;
    for (const auto &row : stabilizer.rows()) {
        stabilizer_ops.push_back(PauliOperator::from_symplectic(row));
    }
    for (const auto &c : candidates) {
        if (c.num_qubits() != n) {
            throw std::invalid_argument("candidate length does not match stabilizer width");
        }
        for (const auto &s : stabilizer_ops) {
            if (!commutes(c, s)) {
                throw std::invalid_argument("candidate " + c.str() + " does not commute with the stabilizer");
            }
        }
    }

    RowEchelon echelon(stabilizer);
    size_t expected = n - echelon.rank();
    std::vector<LogicalPair> pairs;
    while (true) {
        size_t a = 0;
        while (a < candidates.size() && echelon.contains(candidates[a].symplectic())) {
            a++;
        }
        if (a == candidates.size()) {
            break;
        }
        size_t b = 0;
        while (b < candidates.size() && (b == a || commutes(candidates[a], candidates[b]))) {
            b++;
        }
        if (b == candidates.size()) {
            throw std::invalid_argument("candidates do not span the centralizer: " + candidates[a].str() +
                                        " has no anticommuting partner");
        }
        PauliOperator first = candidates[a];
        PauliOperator second = candidates[b];
        std::vector<PauliOperator> rest;
        for (size_t c = 0; c < candidates.size(); c++) {
            if (c == a || c == b) {
                continue;
            }
            PauliOperator op = candidates[c];
            bool with_first = symplectic_product(op, first);
            bool with_second = symplectic_product(op, second);
            if (with_second) {
                op *= first;
            }
            if (with_first) {
                op *= second;
            }
            rest.push_back(std::move(op));
        }
        candidates = std::move(rest);
        pairs.emplace_back(std::move(first), std::move(second));
    }
    if (pairs.size() != expected) {
        throw std::invalid_argument("candidates span " + std::to_string(pairs.size()) + " logical pairs, expected " +
                                    std::to_string(expected));
    }
    return pairs;
}

}  // namespace topostab
