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

#include "topostab/pauli.h"

#include <stdexcept>

namespace topostab {

namespace {

void require_same_length(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli operator length mismatch: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliOperator::PauliOperator(BitVector x, BitVector z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("x and z masks must have the same length");
    }
}

PauliOperator PauliOperator::x_type(const BitVector &support) {
    return PauliOperator(support, BitVector(support.size()));
}

PauliOperator PauliOperator::z_type(const BitVector &support) {
    return PauliOperator(BitVector(support.size()), support);
}

PauliOperator PauliOperator::from_str(std::string_view text) {
    PauliOperator result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.x_.set(k, true);
                break;
            case 'Y':
                result.x_.set(k, true);
                result.z_.set(k, true);
                break;
            case 'Z':
                result.z_.set(k, true);
                break;
            default:
                throw std::invalid_argument(std::string("not a Pauli character: '") + text[k] + "'");
        }
    }
    return result;
}

char PauliOperator::at(size_t qubit) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x_.get(qubit) | (z_.get(qubit) << 1)];
}

size_t PauliOperator::weight() const {
    return (x_ | z_).popcount();
}

BitVector PauliOperator::symplectic() const {
    size_t n = num_qubits();
    BitVector result(2 * n);
    for (size_t q : x_.ones()) {
        result.set(q, true);
    }
    for (size_t q : z_.ones()) {
        result.set(n + q, true);
    }
    return result;
}

PauliOperator PauliOperator::from_symplectic(const BitVector &xz) {
    if (xz.size() % 2) {
        throw std::invalid_argument("symplectic vector must have even length");
    }
    size_t n = xz.size() / 2;
    PauliOperator result(n);
    for (size_t k : xz.ones()) {
        if (k < n) {
            result.x_.set(k, true);
        } else {
            result.z_.set(k - n, true);
        }
    }
    return result;
}

std::string PauliOperator::str() const {
    std::string result(num_qubits(), 'I');
    for (size_t q = 0; q < num_qubits(); q++) {
        result[q] = at(q);
    }
    return result;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    require_same_length(*this, other);
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    PauliOperator result = a;
    result *= b;
    return result;
}

PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) {
    return multiply(a, b);
}

bool symplectic_product(const PauliOperator &a, const PauliOperator &b) {
    require_same_length(a, b);
    return a.x_mask().dot(b.z_mask()) ^ a.z_mask().dot(b.x_mask());
}

}  // namespace topostab
