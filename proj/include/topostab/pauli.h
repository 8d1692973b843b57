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

#ifndef TOPOSTAB_PAULI_H
#define TOPOSTAB_PAULI_H

#include <string>
#include <string_view>

#include "topostab/bit_vector.h"

namespace topostab {

/// An n-qubit Pauli operator in symplectic form, phase dropped.
///
/// Qubit i carries I for (x,z)=(0,0), X for (1,0), Z for (0,1) and Y for
/// (1,1). The global phase is not represented; two operators compare equal
/// iff their masks are equal.
class PauliOperator {
   public:
    PauliOperator() = default;
    /// Identity on n qubits.
    explicit PauliOperator(size_t n) : x_(n), z_(n) {
    }
    PauliOperator(BitVector x, BitVector z);

    static PauliOperator x_type(const BitVector &support);
    static PauliOperator z_type(const BitVector &support);

    /// Parses "IXYZ"-style text; '_' is accepted as I. Qubit 0 leftmost.
    static PauliOperator from_str(std::string_view text);

    size_t num_qubits() const {
        return x_.size();
    }
    const BitVector &x_mask() const {
        return x_;
    }
    const BitVector &z_mask() const {
        return z_;
    }

    /// 'I', 'X', 'Y' or 'Z'.
    char at(size_t qubit) const;

    size_t weight() const;
    bool is_identity() const {
        return x_.none() && z_.none();
    }

    /// Concatenated (x|z) vector of length 2n.
    BitVector symplectic() const;
    static PauliOperator from_symplectic(const BitVector &xz);

    std::string str() const;

    PauliOperator &operator*=(const PauliOperator &other);
    bool operator==(const PauliOperator &other) const = default;

   private:
    BitVector x_;
    BitVector z_;
};

/// Phase-free product: masks XOR componentwise.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);
PauliOperator operator*(const PauliOperator &a, const PauliOperator &b);

/// Parity of the symplectic product sum_i (a.x_i b.z_i + a.z_i b.x_i).
bool symplectic_product(const PauliOperator &a, const PauliOperator &b);

inline bool commutes(const PauliOperator &a, const PauliOperator &b) {
    return !symplectic_product(a, b);
}

inline size_t weight(const PauliOperator &op) {
    return op.weight();
}

}  // namespace topostab

#endif
