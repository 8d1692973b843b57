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

#include "topostab/stabilizer_code.h"

#include <stdexcept>
#include <string>

#include "topostab/errors.h"

namespace topostab {

std::string_view to_string(PauliClass c) {
    switch (c) {
        case PauliClass::in_stabilizer:
            return "in_stabilizer";
        case PauliClass::undetectable_error:
            return "undetectable_error";
        case PauliClass::detectable:
            return "detectable";
    }
    return "?";
}

namespace {

BitMatrix supports_of(std::span<const PauliOperator> ops, size_t n, bool x_part) {
    BitMatrix m(0, n);
    for (const auto &op : ops) {
        m.append_row(x_part ? op.x_mask() : op.z_mask());
    }
    return m;
}

}  // namespace

StabilizerCode::StabilizerCode(Lattice lat, std::vector<PauliOperator> xs, std::vector<PauliOperator> zs)
    : lattice_(std::move(lat)),
      x_generators_(std::move(xs)),
      z_generators_(std::move(zs)),
      x_check_(supports_of(x_generators_, lattice_.num_qubits(), true)),
      z_check_(supports_of(z_generators_, lattice_.num_qubits(), false)),
      x_echelon_(x_check_),
      z_echelon_(z_check_),
      k_(lattice_.num_qubits() - x_echelon_.rank() - z_echelon_.rank()) {
}

StabilizerCode StabilizerCode::from_lattice(Lattice lat) {
    auto report = validate(lat);
    if (!report.passed()) {
        throw ValidationError("lattice failed validation: " + report.summary());
    }
    size_t n = lat.num_qubits();
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
    for (const auto &plaq : lat.plaquettes()) {
        auto support = BitVector::from_indices(n, plaq.qubits);
        bool color = lat.kind() == LatticeKind::color;
        if (color || plaq.color == PlaquetteColor::dark) {
            xs.push_back(PauliOperator::x_type(support));
        }
        if (color || plaq.color == PlaquetteColor::light) {
            zs.push_back(PauliOperator::z_type(support));
        }
    }
    for (size_t i = 0; i < xs.size(); i++) {
        for (size_t j = 0; j < zs.size(); j++) {
            if (!commutes(xs[i], zs[j])) {
                throw ValidationError("X generator " + std::to_string(i) + " anticommutes with Z generator " +
                                      std::to_string(j));
            }
        }
    }
    return StabilizerCode(std::move(lat), std::move(xs), std::move(zs));
}

std::vector<PauliOperator> StabilizerCode::generators() const {
    std::vector<PauliOperator> result(x_generators_.begin(), x_generators_.end());
    result.insert(result.end(), z_generators_.begin(), z_generators_.end());
    return result;
}

BitMatrix StabilizerCode::symplectic_check() const {
    auto gens = generators();
    return symplectic_matrix(gens, n());
}

bool StabilizerCode::commutes_with_stabilizer(const PauliOperator &op) const {
    if (op.num_qubits() != n()) {
        throw std::invalid_argument("operator has " + std::to_string(op.num_qubits()) + " qubits, code has " +
                                    std::to_string(n()));
    }
    // X generators see the z part, Z generators the x part.
    return x_check_.multiply(op.z_mask()).none() && z_check_.multiply(op.x_mask()).none();
}

bool StabilizerCode::in_stabilizer(const PauliOperator &op) const {
    if (op.num_qubits() != n()) {
        throw std::invalid_argument("operator length mismatch");
    }
    return x_echelon_.contains(op.x_mask()) && z_echelon_.contains(op.z_mask());
}

PauliClass StabilizerCode::classify(const PauliOperator &op) const {
    if (!commutes_with_stabilizer(op)) {
        return PauliClass::detectable;
    }
    return in_stabilizer(op) ? PauliClass::in_stabilizer : PauliClass::undetectable_error;
}

std::vector<LogicalPair> logical_basis(const StabilizerCode &code) {
    std::vector<PauliOperator> candidates;
    for (const auto &v : kernel_basis(code.z_check())) {
        candidates.push_back(PauliOperator::x_type(v));
    }
    for (const auto &v : kernel_basis(code.x_check())) {
        candidates.push_back(PauliOperator::z_type(v));
    }
    return symplectic_pairs(std::move(candidates), code.symplectic_check());
}

bool is_self_dual_css(const StabilizerCode &code) {
    const auto &xe = code.x_echelon();
    const auto &ze = code.z_echelon();
    if (xe.rank() != ze.rank()) {
        return false;
    }
    for (const auto &row : xe.basis()) {
        if (!ze.contains(row)) {
            return false;
        }
    }
    return true;
}

}  // namespace topostab
