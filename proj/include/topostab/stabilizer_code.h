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

#ifndef TOPOSTAB_STABILIZER_CODE_H
#define TOPOSTAB_STABILIZER_CODE_H

#include <span>
#include <string_view>
#include <vector>

#include "topostab/gf2.h"
#include "topostab/lattice.h"
#include "topostab/pauli.h"

namespace topostab {

enum class PauliClass { in_stabilizer, undetectable_error, detectable };

std::string_view to_string(PauliClass c);

/// CSS stabilizer code generated by the plaquette operators of a lattice.
///
/// Surface lattices contribute X on dark and Z on light plaquettes; color
/// lattices contribute both X and Z on every plaquette. Generator rows are
/// kept in plaquette order.
class StabilizerCode {
   public:
    /// Throws ValidationError if `lat` fails validation or two generators
    /// anticommute.
    static StabilizerCode from_lattice(Lattice lat);

    const Lattice &lattice() const {
        return lattice_;
    }
    size_t n() const {
        return lattice_.num_qubits();
    }
    size_t k() const {
        return k_;
    }

    std::span<const PauliOperator> x_generators() const {
        return x_generators_;
    }
    std::span<const PauliOperator> z_generators() const {
        return z_generators_;
    }
    /// X generators first, then Z generators.
    std::vector<PauliOperator> generators() const;

    /// Rows are X-generator supports (resp. Z-generator supports).
    const BitMatrix &x_check() const {
        return x_check_;
    }
    const BitMatrix &z_check() const {
        return z_check_;
    }
    const RowEchelon &x_echelon() const {
        return x_echelon_;
    }
    const RowEchelon &z_echelon() const {
        return z_echelon_;
    }

    /// Stacked (x|z) generator matrix with 2n columns.
    BitMatrix symplectic_check() const;

    PauliClass classify(const PauliOperator &op) const;
    bool in_stabilizer(const PauliOperator &op) const;
    bool commutes_with_stabilizer(const PauliOperator &op) const;

   private:
    StabilizerCode(Lattice lat, std::vector<PauliOperator> xs, std::vector<PauliOperator> zs);

    Lattice lattice_;
    std::vector<PauliOperator> x_generators_;
    std::vector<PauliOperator> z_generators_;
    BitMatrix x_check_;
    BitMatrix z_check_;
    RowEchelon x_echelon_;
    RowEchelon z_echelon_;
    size_t k_;
};

/// k pairs (logical X, logical Z), taken from symplectic Gram-Schmidt over
/// the kernels of the check matrices. Not weight-minimized.
std::vector<LogicalPair> logical_basis(const StabilizerCode &code);

/// True iff X and Z generator supports span the same GF(2) rowspace.
bool is_self_dual_css(const StabilizerCode &code);

}  // namespace topostab

#endif
